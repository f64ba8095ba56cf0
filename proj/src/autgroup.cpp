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

#include "autopt/autgroup.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace autopt {

namespace {

std::vector<uint64_t> generator_rows(const StabCode& code) {
    std::vector<uint64_t> rows(code.generators().rows());
    for (size_t r = 0; r < rows.size(); ++r) rows[r] = code.generators().packed_row(r);
    return rows;
}

uint64_t column_mask(uint64_t cols, size_t n) { return cols | (cols << n); }

// act[c][v]: local c applied to the GF(4) code v.
const std::array<std::array<uint8_t, 4>, 6>& local_table() {
    static const auto table = [] {
        std::array<std::array<uint8_t, 4>, 6> t{};
        for (auto c : kAllLocals)
            for (uint8_t v = 0; v < 4; ++v) t[static_cast<size_t>(c)][v] = local_apply(c, Gf4::from_code(v)).code();
        return t;
    }();
    return table;
}

// Shared read-only state of one search.
struct SearchPlan {
    size_t n = 0;
    std::vector<uint64_t> rows;
    std::vector<size_t> order;                 // source qubits in assignment order
    std::vector<PackedSpan> projection;        // indexed by destination column mask
    std::vector<std::vector<uint64_t>> shortened;  // rows of C supported on the first m+1 ordered qubits
    PackedSpan full;
};

// Most distinct nonzero generator entries first, then most nonzero entries.
std::vector<size_t> assignment_order(const std::vector<uint64_t>& rows, size_t n) {
    std::vector<std::pair<int, int>> score(n);
    for (size_t j = 0; j < n; ++j) {
        unsigned seen = 0;
        int nonzero = 0;
        for (uint64_t r : rows) {
            const unsigned v = ((r >> j) & 1u) | (((r >> (n + j)) & 1u) << 1);
            if (v) {
                seen |= 1u << v;
                ++nonzero;
            }
        }
        score[j] = {__builtin_popcount(seen), nonzero};
    }
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return score[a] > score[b]; });
    return order;
}

// Basis of the code words vanishing outside `cols`.
std::vector<uint64_t> shorten(std::vector<uint64_t> rows, uint64_t cols, size_t n) {
    const uint64_t outside = column_mask(((uint64_t{1} << n) - 1) & ~cols, n);
    std::vector<uint64_t> out;
    for (size_t bit = 0; bit < 2 * n; ++bit) {
        if (!((outside >> bit) & 1u)) continue;
        const uint64_t b = uint64_t{1} << bit;
        auto it = std::find_if(rows.begin(), rows.end(), [b](uint64_t r) { return r & b; });
        if (it == rows.end()) continue;
        const uint64_t pivot = *it;
        rows.erase(it);
        for (auto& r : rows)
            if (r & b) r ^= pivot;
    }
    for (uint64_t r : rows)
        if (r) out.push_back(r);
    return out;
}

SearchPlan make_plan(const StabCode& code) {
    SearchPlan p;
    p.n = code.n();
    p.rows = generator_rows(code);
    p.order = assignment_order(p.rows, p.n);
    p.full = PackedSpan(p.rows);
    const uint64_t subsets = uint64_t{1} << p.n;
    p.projection.resize(subsets);
    for (uint64_t d = 0; d < subsets; ++d) {
        std::vector<uint64_t> masked(p.rows.size());
        const uint64_t m = column_mask(d, p.n);
        for (size_t r = 0; r < p.rows.size(); ++r) masked[r] = p.rows[r] & m;
        p.projection[d] = PackedSpan(masked);
    }
    uint64_t prefix = 0;
    p.shortened.resize(p.n);
    for (size_t m = 0; m < p.n; ++m) {
        prefix |= uint64_t{1} << p.order[m];
        p.shortened[m] = shorten(p.rows, prefix, p.n);
    }
    return p;
}

// Depth-first search from a given depth with a partially filled op.
class Searcher {
public:
    Searcher(const SearchPlan& plan, std::atomic<uint64_t>& nodes, uint64_t max_nodes, std::atomic<bool>& abort)
        : plan_(plan), nodes_(nodes), max_nodes_(max_nodes), abort_(abort), images_(plan.n + 1) {
        images_[0].assign(plan.rows.size(), 0);
        op_ = MonomialOp::identity(plan.n);
    }

    template <typename Fn>
    void run_branch(size_t dest, LocalClifford c, Fn&& fn) {
        used_ = 0;
        if (try_assign(0, dest, c)) {
            used_ = uint64_t{1} << dest;
            descend(1, fn);
        }
        flush();
    }

    template <typename Fn>
    void run_all(Fn&& fn) {
        used_ = 0;
        descend(0, fn);
        flush();
    }

    uint64_t local_nodes() const { return total_; }

private:
    // Assigns ordered qubit `depth` and checks the partial images.
    bool try_assign(size_t depth, size_t dest, LocalClifford c) {
        if (++pending_ >= 4096) flush();
        ++total_;
        const size_t n = plan_.n;
        const size_t j = plan_.order[depth];
        const auto& act = local_table()[static_cast<size_t>(c)];
        op_.set_perm(j, dest);
        op_.set_local(j, c);
        const uint64_t dmask = used_ | (uint64_t{1} << dest);
        const auto& prev = images_[depth];
        auto& cur = images_[depth + 1];
        cur.resize(prev.size());
        const PackedSpan& proj = plan_.projection[dmask];
        for (size_t r = 0; r < plan_.rows.size(); ++r) {
            const uint64_t row = plan_.rows[r];
            const uint8_t v = static_cast<uint8_t>(((row >> j) & 1u) | (((row >> (n + j)) & 1u) << 1));
            const uint8_t w = act[v];
            cur[r] = prev[r] | (static_cast<uint64_t>(w & 1u) << dest) | (static_cast<uint64_t>(w >> 1) << (n + dest));
            if (!proj.contains(cur[r])) return false;
        }
        for (uint64_t s : plan_.shortened[depth]) {
            if (!plan_.full.contains(partial_image(s, depth))) return false;
        }
        return true;
    }

    uint64_t partial_image(uint64_t row, size_t depth) const {
        const size_t n = plan_.n;
        uint64_t out = 0;
        for (size_t m = 0; m <= depth; ++m) {
            const size_t j = plan_.order[m];
            const uint8_t v = static_cast<uint8_t>(((row >> j) & 1u) | (((row >> (n + j)) & 1u) << 1));
            const uint8_t w = local_table()[static_cast<size_t>(op_.local(j))][v];
            const size_t d = op_.perm(j);
            out |= (static_cast<uint64_t>(w & 1u) << d) | (static_cast<uint64_t>(w >> 1) << (n + d));
        }
        return out;
    }

    template <typename Fn>
    void descend(size_t depth, Fn& fn) {
        if (abort_.load(std::memory_order_relaxed)) return;
        if (depth == plan_.n) {
            fn(op_);
            return;
        }
        for (size_t dest = 0; dest < plan_.n; ++dest) {
            if ((used_ >> dest) & 1u) continue;
            for (auto c : kAllLocals) {
                if (!try_assign(depth, dest, c)) continue;
                used_ |= uint64_t{1} << dest;
                descend(depth + 1, fn);
                used_ &= ~(uint64_t{1} << dest);
            }
        }
    }

    void flush() {
        if (!pending_) return;
        if (nodes_.fetch_add(pending_) + pending_ > max_nodes_) abort_.store(true);
        pending_ = 0;
    }

    const SearchPlan& plan_;
    std::atomic<uint64_t>& nodes_;
    uint64_t max_nodes_;
    std::atomic<bool>& abort_;
    std::vector<std::vector<uint64_t>> images_;
    MonomialOp op_;
    uint64_t used_ = 0;
    uint64_t pending_ = 0;
    uint64_t total_ = 0;
};

// Every monomial map fixes a code without stabilisers.
AutGroup whole_hamming_group(size_t n, const SearchBudget& budget) {
    AutGroup g;
    g.order = hamming_order(n);
    if (g.order <= budget.max_materialize) {
        g.elements.reserve(g.order);
        for (uint64_t i = 0; i < g.order; ++i) g.elements.push_back(hamming_element(n, i));
        std::sort(g.elements.begin(), g.elements.end());
        g.materialized = true;
    }
    return g;
}

AutGroup search_group(const StabCode& code, const SearchBudget& budget, bool parallel) {
    if (code.generators().rows() == 0) return whole_hamming_group(code.n(), budget);
    const SearchPlan plan = make_plan(code);
    const size_t n = plan.n;
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::atomic<uint64_t> order{0};
    std::atomic<bool> overflow{false};

    const size_t branches = 6 * n;
    std::vector<std::vector<MonomialOp>> found(branches);
    auto body = [&](size_t b) {
        Searcher s(plan, nodes, budget.max_nodes, abort);
        auto& out = found[b];
        uint64_t count = 0;
        s.run_branch(b / 6, kAllLocals[b % 6], [&](const MonomialOp& op) {
            ++count;
            if (overflow.load(std::memory_order_relaxed)) return;
            out.push_back(op);
            if (order.load(std::memory_order_relaxed) + out.size() > budget.max_materialize) overflow.store(true);
        });
        order.fetch_add(count);
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (size_t b = 0; b < branches; ++b) body(b);
    } else {
        for (size_t b = 0; b < branches; ++b) body(b);
    }
    if (abort.load()) throw BudgetExceeded("automorphism search exceeded " + std::to_string(budget.max_nodes) + " nodes");

    AutGroup g;
    g.order = order.load();
    g.nodes = nodes.load();
    if (g.order <= budget.max_materialize) {
        for (auto& part : found) g.elements.insert(g.elements.end(), part.begin(), part.end());
        std::sort(g.elements.begin(), g.elements.end());
        g.materialized = true;
    }
    return g;
}

using OpSet = std::unordered_set<MonomialOp, MonomialOpHash>;

// Grows `set` to its closure under right multiplication by `gens`.
void close_under(OpSet& set, std::vector<MonomialOp> frontier, const std::vector<MonomialOp>& gens, uint64_t cap) {
    while (!frontier.empty()) {
        const MonomialOp x = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            MonomialOp y = compose(x, g);
            if (set.insert(y).second) {
                if (set.size() > cap) throw BudgetExceeded("closure exceeded " + std::to_string(cap) + " elements");
                frontier.push_back(y);
            }
        }
    }
}

CanonicalKey key_under(const MonomialOp& tau, const std::vector<uint64_t>& rows, size_t n) {
    std::vector<uint64_t> img(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) img[r] = apply_packed(tau, rows[r]);
    return canonical_key_of_rows(std::move(img), 2 * n);
}

OrbitResult orbit_impl(const StabCode& code, const SearchBudget& budget, bool parallel) {
    const size_t n = code.n();
    const auto rows = generator_rows(code);
    const auto gens = hamming_generators(n);

    OrbitResult result;
    std::unordered_set<CanonicalKey, CanonicalKeyHash> seen;
    std::vector<OrbitEntry> layer{{MonomialOp::identity(n), key_under(MonomialOp::identity(n), rows, n), 0}};
    seen.insert(layer.front().key);
    result.entries = layer;

    for (uint32_t depth = 1; !layer.empty(); ++depth) {
        struct Candidate {
            CanonicalKey key;
            MonomialOp tau;
        };
        std::vector<Candidate> cand(layer.size() * gens.size());
        const auto expand = [&](size_t i) {
            const size_t e = i / gens.size();
            MonomialOp tau = compose(gens[i % gens.size()], layer[e].tau);
            cand[i] = {key_under(tau, rows, n), tau};
        };
        const size_t total = cand.size();
        if (parallel) {
#pragma omp parallel for schedule(static)
            for (size_t i = 0; i < total; ++i) expand(i);
        } else {
            for (size_t i = 0; i < total; ++i) expand(i);
        }
        std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
            if (a.key != b.key) return a.key < b.key;
            return a.tau < b.tau;
        });
        std::vector<OrbitEntry> next;
        for (size_t i = 0; i < cand.size(); ++i) {
            if (i > 0 && cand[i].key == cand[i - 1].key) continue;
            if (!seen.insert(cand[i].key).second) continue;
            next.push_back({cand[i].tau, std::move(cand[i].key), depth});
        }
        std::sort(next.begin(), next.end(), [](const OrbitEntry& a, const OrbitEntry& b) { return a.tau < b.tau; });
        for (const auto& e : next) {
            if (result.entries.size() >= budget.max_orbit) {
                result.complete = false;
                return result;
            }
            result.entries.push_back(e);
        }
        layer = std::move(next);
    }
    return result;
}

}  // namespace

bool is_automorphism(const MonomialOp& op, const StabCode& code) {
    if (op.n() != code.n()) throw std::invalid_argument("is_automorphism: size mismatch");
    const auto rows = generator_rows(code);
    const PackedSpan span(rows);
    return std::all_of(rows.begin(), rows.end(), [&](uint64_t r) { return span.contains(apply_packed(op, r)); });
}

std::vector<MonomialOp> hamming_generators(size_t n) {
    if (n == 0 || n > kMaxQubits) throw std::invalid_argument("hamming_generators: n out of range");
    std::vector<MonomialOp> gens;
    MonomialOp swap = MonomialOp::identity(n);
    if (n >= 2) {
        swap.set_perm(0, 1);
        swap.set_perm(1, 0);
    }
    gens.push_back(swap);
    MonomialOp cycle = MonomialOp::identity(n);
    for (size_t j = 0; j < n; ++j) cycle.set_perm(j, (j + n - 1) % n);
    gens.push_back(cycle);
    for (size_t j = 0; j < n; ++j) {
        MonomialOp s = MonomialOp::identity(n);
        s.set_local(j, LocalClifford::SH);
        gens.push_back(s);
    }
    for (size_t j = 0; j < n; ++j) {
        MonomialOp c = MonomialOp::identity(n);
        c.set_local(j, LocalClifford::HSH);
        gens.push_back(c);
    }
    return gens;
}

AutGroup automorphism_group(const StabCode& code, const SearchBudget& budget) { return search_group(code, budget, true); }

AutGroup automorphism_group_serial(const StabCode& code, const SearchBudget& budget) {
    return search_group(code, budget, false);
}

void for_each_automorphism(const StabCode& code, const std::function<void(const MonomialOp&)>& fn,
                           const SearchBudget& budget) {
    if (code.generators().rows() == 0) {
        const uint64_t total = hamming_order(code.n());
        for (uint64_t i = 0; i < total; ++i) fn(hamming_element(code.n(), i));
        return;
    }
    const SearchPlan plan = make_plan(code);
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    Searcher s(plan, nodes, budget.max_nodes, abort);
    s.run_all([&](const MonomialOp& op) { fn(op); });
    if (abort.load()) throw BudgetExceeded("automorphism search exceeded " + std::to_string(budget.max_nodes) + " nodes");
}

namespace {

std::vector<MonomialOp> brute_automorphisms_impl(const StabCode& code, bool parallel) {
    const size_t n = code.n();
    if (n > 5) throw std::invalid_argument("brute_automorphisms: n must be at most 5");
    const uint64_t total = hamming_order(n);
    const auto rows = generator_rows(code);
    const PackedSpan span(rows);
    std::vector<uint8_t> keep(total, 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (uint64_t i = 0; i < total; ++i) {
        const MonomialOp op = hamming_element(n, i);
        keep[i] = std::all_of(rows.begin(), rows.end(), [&](uint64_t r) { return span.contains(apply_packed(op, r)); });
    }
    std::vector<MonomialOp> out;
    for (uint64_t i = 0; i < total; ++i)
        if (keep[i]) out.push_back(hamming_element(n, i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<MonomialOp> brute_automorphisms(const StabCode& code) { return brute_automorphisms_impl(code, true); }
std::vector<MonomialOp> brute_automorphisms_serial(const StabCode& code) { return brute_automorphisms_impl(code, false); }

std::vector<MonomialOp> closure(const std::vector<MonomialOp>& gens, size_t n, uint64_t cap) {
    OpSet set{MonomialOp::identity(n)};
    close_under(set, {MonomialOp::identity(n)}, gens, cap);
    std::vector<MonomialOp> out(set.begin(), set.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<MonomialOp> generating_set(const std::vector<MonomialOp>& group) {
    if (group.empty()) return {};
    std::vector<MonomialOp> sorted = group;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.front().n();
    OpSet sub{MonomialOp::identity(n)};
    std::vector<MonomialOp> gens;
    for (const auto& x : sorted) {
        if (sub.count(x)) continue;
        gens.push_back(x);
        std::vector<MonomialOp> frontier(sub.begin(), sub.end());
        close_under(sub, std::move(frontier), gens, group.size());
    }
    return gens;
}

OrbitResult code_orbit(const StabCode& code, const SearchBudget& budget) { return orbit_impl(code, budget, true); }

OrbitResult code_orbit_serial(const StabCode& code, const SearchBudget& budget) {
    return orbit_impl(code, budget, false);
}

}  // namespace autopt
