// Copyright 2026 The autopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autopt/optimizer.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace autopt {

namespace {

bool less(const Conjugate& a, const Conjugate& b) {
    return std::tie(a.cliffords, a.circuit, a.g) < std::tie(b.cliffords, b.circuit, b.g);
}

std::vector<std::vector<size_t>> cycles_of(const MonomialOp& op) {
    const size_t n = op.n();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<size_t>> out;
    for (size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<size_t> cyc;
        for (size_t j = s; !seen[j]; j = op.perm(j)) {
            seen[j] = true;
            cyc.push_back(j);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

// Best local assignment on one cycle i_0 -> i_1 -> ... of pi for a fixed
// sigma_g: minimises (cliffords, locals by position, gamma by qubit).
struct CycleChoice {
    unsigned cliffords = ~0u;
    std::vector<uint8_t> locals_by_position;
    std::vector<uint8_t> gamma_by_qubit;
    std::vector<LocalClifford> locals;  // indexed by t
    std::vector<LocalClifford> gamma;   // indexed by t
};

CycleChoice best_on_cycle(const MonomialOp& pi, const std::vector<size_t>& cyc, const std::vector<size_t>& sigma_g) {
    const size_t m = cyc.size();
    std::vector<size_t> by_position(m), by_qubit(m);
    std::iota(by_position.begin(), by_position.end(), 0);
    std::iota(by_qubit.begin(), by_qubit.end(), 0);
    std::sort(by_position.begin(), by_position.end(), [&](size_t a, size_t b) { return sigma_g[cyc[a]] < sigma_g[cyc[b]]; });
    std::sort(by_qubit.begin(), by_qubit.end(), [&](size_t a, size_t b) { return cyc[a] < cyc[b]; });

    // A cycle needs at most one non-identity local, so only tuples with a
    // single free slot are tried. Given gamma_0 and the tuple, the rest of
    // gamma follows from l_t = gamma_{t+1} pi_t gamma_t^-1; it must close up.
    CycleChoice best;
    std::vector<LocalClifford> gamma(m + 1), locals(m);
    std::vector<uint8_t> lkey(m), gkey(m);
    for (auto g0 : kAllLocals) {
        for (size_t slot = 0; slot < m; ++slot) {
            for (auto l : kAllLocals) {
                if (l == LocalClifford::I && slot > 0) continue;
                gamma[0] = g0;
                for (size_t t = 0; t < m; ++t) {
                    locals[t] = t == slot ? l : LocalClifford::I;
                    gamma[t + 1] = local_mul(locals[t], local_mul(gamma[t], local_inv(pi.local(cyc[t]))));
                }
                if (gamma[m] != g0) continue;
                const unsigned cliff = l != LocalClifford::I;
                for (size_t q = 0; q < m; ++q) {
                    lkey[q] = static_cast<uint8_t>(locals[by_position[q]]);
                    gkey[q] = static_cast<uint8_t>(gamma[by_qubit[q]]);
                }
                if (std::tie(cliff, lkey, gkey) < std::tie(best.cliffords, best.locals_by_position, best.gamma_by_qubit))
                    best = {cliff, lkey, gkey, locals, {gamma.begin(), gamma.begin() + m}};
            }
        }
    }
    return best;
}

Conjugate brute_conjugate_impl(const MonomialOp& pi, bool parallel) {
    const size_t n = pi.n();
    if (n > 5) throw std::invalid_argument("brute_conjugate: n must be at most 5");
    const uint64_t total = hamming_order(n);
    const int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<Conjugate> best(threads);
    for (auto& b : best) b.cliffords = ~0u;
#pragma omp parallel for schedule(static) num_threads(threads)
    for (uint64_t i = 0; i < total; ++i) {
        const MonomialOp g = hamming_element(n, i);
        const MonomialOp c = compose(g, compose(pi, inverse(g)));
        const Conjugate cand{static_cast<unsigned>(clifford_count(c)), c, g};
        auto& mine = best[omp_get_thread_num()];
        if (less(cand, mine)) mine = cand;
    }
    return *std::min_element(best.begin(), best.end(), less);
}

std::map<ClassId, std::vector<MonomialOp>> classify_elements(const StabCode& code, const std::vector<MonomialOp>& elements) {
    const auto& sp = sp_group(code.k());
    std::map<ClassId, std::vector<MonomialOp>> out;
    for (const auto& pi : elements) out[ClassId{code.k(), sp.label_of_packed(logical_packed(pi, code))}].push_back(pi);
    return out;
}

std::vector<Conjugate> best_conjugates(const std::vector<MonomialOp>& ops) {
    std::vector<Conjugate> out(ops.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (size_t i = 0; i < ops.size(); ++i) out[i] = best_conjugate(ops[i]);
    for (size_t i = 0; i < ops.size(); ++i) {
        if (out[i].cliffords != min_cliffords_over_conjugation(ops[i]))
            throw std::logic_error("conjugation search disagrees with the cycle-product count for " + ops[i].str());
    }
    return out;
}

OptResult assemble(const StabCode& code, ClassId cls, const Metric& metric, const std::vector<MonomialOp>& members,
                   const std::vector<Conjugate>& conj) {
    size_t best = 0;
    auto key = [&](size_t i) { return std::make_tuple(metric.swap_weight * swap_count(members[i]) + conj[i].cliffords, conj[i].circuit, conj[i].g); };
    for (size_t i = 1; i < members.size(); ++i)
        if (key(i) < key(best)) best = i;

    const auto& sp = sp_group(code.k());
    const MonomialOp& pi = members[best];
    const BinMatrix target = sp.representative(cls.index).mat();
    const auto a = sp.find_conjugator(packed::unpack(logical_packed(pi, code), code.k()), target);
    if (!a) throw std::logic_error("no basis change reaches the class representative");
    StabCode out = transform_code(basis_change(code, *a), conj[best].g);
    LogicalAction realized = logical_action(conj[best].circuit, out);
    if (realized.L.mat() != target || realized.cls != cls) throw std::logic_error("witness does not realize the representative");
    const unsigned cost = std::get<0>(key(best));
    if (cost != metric.cost(conj[best].circuit)) throw std::logic_error("cost bookkeeping mismatch");
    return OptResult{cls, cost, conj[best].circuit, pi, conj[best].g, *a, std::move(out), std::move(realized), true,
                     "cycle-decomposed conjugation search"};
}

}  // namespace

Metric Metric::from_number(int number) {
    if (number == 1) return controlled_clifford();
    if (number == 2) return local_clifford();
    throw std::invalid_argument("metric must be 1 or 2");
}

const char* Metric::name() const { return kind == MetricKind::ControlledClifford ? "controlled_clifford" : "local_clifford"; }

std::map<ClassId, std::vector<MonomialOp>> classify_automorphisms(const StabCode& code, const SearchBudget& budget) {
    const auto group = automorphism_group(code, budget);
    if (!group.materialized) throw BudgetExceeded("automorphism group too large to classify");
    return classify_elements(code, group.elements);
}

size_t min_cliffords_over_conjugation(const MonomialOp& pi) {
    size_t count = 0;
    for (const auto& cyc : cycles_of(pi)) {
        LocalClifford prod = LocalClifford::I;
        for (size_t j : cyc) prod = local_mul(pi.local(j), prod);
        count += prod != LocalClifford::I;
    }
    return count;
}

MonomialOp canonical_conjugator(const MonomialOp& pi) {
    MonomialOp g = MonomialOp::identity(pi.n());
    for (const auto& cyc : cycles_of(pi)) {
        LocalClifford gamma = LocalClifford::I;
        for (size_t t = 0; t < cyc.size(); ++t) {
            g.set_local(cyc[t], gamma);
            gamma = local_mul(gamma, local_inv(pi.local(cyc[t])));
        }
    }
    return g;
}

Conjugate best_conjugate(const MonomialOp& pi) {
    const size_t n = pi.n();
    const auto cycles = cycles_of(pi);

    // Least conjugate permutation and the sigma_g reaching it, in order.
    std::vector<size_t> sg(n);
    std::iota(sg.begin(), sg.end(), 0);
    std::vector<size_t> best_perm;
    std::vector<std::vector<size_t>> keep;
    do {
        std::vector<size_t> cp(n);
        for (size_t i = 0; i < n; ++i) cp[sg[i]] = sg[pi.perm(i)];
        if (best_perm.empty() || cp < best_perm) {
            best_perm = cp;
            keep.clear();
        }
        if (cp == best_perm) keep.push_back(sg);
    } while (std::next_permutation(sg.begin(), sg.end()));

    Conjugate best;
    best.cliffords = ~0u;
    for (const auto& sigma : keep) {
        Conjugate cand{0, MonomialOp::identity(n), MonomialOp::identity(n)};
        for (size_t p = 0; p < n; ++p) cand.circuit.set_perm(p, best_perm[p]);
        for (size_t j = 0; j < n; ++j) cand.g.set_perm(j, sigma[j]);
        for (const auto& cyc : cycles) {
            const auto choice = best_on_cycle(pi, cyc, sigma);
            cand.cliffords += choice.cliffords;
            for (size_t t = 0; t < cyc.size(); ++t) {
                cand.circuit.set_local(sigma[cyc[t]], choice.locals[t]);
                cand.g.set_local(cyc[t], choice.gamma[t]);
            }
        }
        if (less(cand, best)) best = cand;
    }
    return best;
}

Conjugate brute_conjugate(const MonomialOp& pi) { return brute_conjugate_impl(pi, true); }
Conjugate brute_conjugate_serial(const MonomialOp& pi) { return brute_conjugate_impl(pi, false); }

OptResult optimize(const StabCode& code, ClassId cls, const Metric& metric, const SearchBudget& budget) {
    const auto classes = classify_automorphisms(code, budget);
    const auto it = classes.find(cls);
    if (it == classes.end())
        throw EmptyClass("class " + std::to_string(cls.index) + " has no automorphism of this code");
    return assemble(code, cls, metric, it->second, best_conjugates(it->second));
}

std::vector<OptResult> full_table(const StabCode& code, const Metric& metric, bool include_identity,
                                  const SearchBudget& budget) {
    const auto classes = classify_automorphisms(code, budget);
    std::vector<OptResult> rows;
    for (const auto& [cls, members] : classes) {
        if (cls.index == 1 && !include_identity) continue;
        rows.push_back(assemble(code, cls, metric, members, best_conjugates(members)));
    }
    return rows;
}

namespace {

std::vector<std::map<ClassId, unsigned>> oracle_table_impl(const StabCode& code, const std::vector<Metric>& metrics,
                                                           bool parallel) {
    const size_t n = code.n();
    if (n > 5) throw std::invalid_argument("brute_oracle: n must be at most 5");
    const auto elements = brute_automorphisms(code);
    std::vector<ClassId> cls(elements.size());
    for (size_t i = 0; i < elements.size(); ++i) cls[i] = logical_action(elements[i], code).cls;

    const size_t nm = metrics.size();
    const size_t cells = elements.size() * nm;
    const uint64_t total = hamming_order(n);
    std::vector<unsigned> best(cells, ~0u);
#pragma omp parallel if (parallel)
    {
        std::vector<unsigned> mine(cells, ~0u);
#pragma omp for schedule(static)
        for (uint64_t gi = 0; gi < total; ++gi) {
            const MonomialOp g = hamming_element(n, gi);
            const MonomialOp ginv = inverse(g);
            for (size_t e = 0; e < elements.size(); ++e) {
                const MonomialOp c = compose(g, compose(elements[e], ginv));
                for (size_t m = 0; m < nm; ++m) mine[e * nm + m] = std::min(mine[e * nm + m], metrics[m].cost(c));
            }
        }
#pragma omp critical
        for (size_t i = 0; i < cells; ++i) best[i] = std::min(best[i], mine[i]);
    }
    std::vector<std::map<ClassId, unsigned>> out(nm);
    for (size_t e = 0; e < elements.size(); ++e) {
        for (size_t m = 0; m < nm; ++m) {
            auto [it, fresh] = out[m].emplace(cls[e], best[e * nm + m]);
            if (!fresh) it->second = std::min(it->second, best[e * nm + m]);
        }
    }
    return out;
}

}  // namespace

std::vector<std::map<ClassId, unsigned>> brute_oracle_table(const StabCode& code, const std::vector<Metric>& metrics) {
    return oracle_table_impl(code, metrics, true);
}
std::vector<std::map<ClassId, unsigned>> brute_oracle_table_serial(const StabCode& code, const std::vector<Metric>& metrics) {
    return oracle_table_impl(code, metrics, false);
}

unsigned brute_oracle(const StabCode& code, ClassId cls, const Metric& metric) {
    const auto table = brute_oracle_table(code, {metric});
    const auto it = table[0].find(cls);
    if (it == table[0].end()) throw EmptyClass("class " + std::to_string(cls.index) + " has no automorphism of this code");
    return it->second;
}

std::map<unsigned, MonomialOp> fixed_basis_costs(const StabCode& code, const BinMatrix& target, const Metric& metric) {
    const auto group = automorphism_group(code);
    if (!group.materialized) throw BudgetExceeded("automorphism group too large");
    const uint64_t want = packed::pack(target);
    std::map<unsigned, MonomialOp> out;
    for (const auto& pi : group.elements) {
        if (logical_packed(pi, code) != want) continue;
        out.emplace(metric.cost(pi), pi);  // elements are sorted, first is least
    }
    return out;
}

std::map<unsigned, MonomialOp> basis_change_costs(const StabCode& code, const BinMatrix& target, const Metric& metric) {
    const auto& sp = sp_group(code.k());
    const ClassId cls = sp.class_of(target);
    const auto classes = classify_automorphisms(code);
    std::map<unsigned, MonomialOp> out;
    const auto it = classes.find(cls);
    if (it == classes.end()) return out;
    for (const auto& pi : it->second) out.emplace(metric.cost(pi), pi);
    return out;
}

std::string verify_result(const OptResult& r, const Metric& metric) {
    if (r.circuit.n() != r.code_out.n()) return "circuit size does not match the code";
    if (!is_automorphism(r.circuit, r.code_out)) return "circuit is not an automorphism of the emitted code";
    const auto act = logical_action(r.circuit, r.code_out);
    if (act.L.mat() != r.realized.L.mat()) return "logical action differs from the emitted L";
    if (act.cls != r.cls) return "logical action lies in class " + std::to_string(act.cls.index);
    if (metric.cost(r.circuit) != r.cost) return "cost is " + std::to_string(metric.cost(r.circuit));
    if (r.source.n() == r.circuit.n() && r.tau.n() == r.circuit.n() &&
        conjugate_automorphism(r.tau, r.source) != r.circuit)
        return "circuit is not tau source tau^-1";
    return {};
}

}  // namespace autopt
