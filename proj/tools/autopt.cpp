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

// autopt: command line front end.
//
// Exit status: 0 success, 1 input error, 2 search budget exceeded.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "autopt/optimizer.hpp"
#include "json.hpp"

using namespace autopt;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
    std::string code;
    std::string format = "json";
    int metric = 1;
    int swap_weight = -1;
    size_t cls = 0;
    bool include_identity = false;
    int threads = 0;
    uint64_t max_nodes = SearchBudget{}.max_nodes;
    uint64_t max_orbit = SearchBudget{}.max_orbit;
    bool allow_large = false;
    std::string input;
    std::string kind = "csv";
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SearchBudget budget_of(const Config& c) {
    SearchBudget b;
    b.max_nodes = c.max_nodes;
    b.max_orbit = c.max_orbit;
    return b;
}

Metric metric_of(const Config& c) {
    Metric m = Metric::from_number(c.metric);
    if (c.swap_weight >= 0) m.swap_weight = static_cast<unsigned>(c.swap_weight);
    return m;
}

StabCode load(const Config& c) {
    StabCode code = resolve_code(c.code);
    if (!c.allow_large && (code.n() > 7 || code.k() > 2))
        throw InputError("codes beyond n = 7 or k = 2 need --allow-large");
    return code;
}

std::string bits(const BinMatrix& m, size_t r) {
    std::string s;
    for (size_t c = 0; c < m.cols(); ++c) s += m.get(r, c) ? '1' : '0';
    return s;
}

Json bin_rows(const BinMatrix& m) {
    Json out = Json::array();
    for (size_t r = 0; r < m.rows(); ++r) out.push_back(bits(m, r));
    return out;
}

Json op_json(const MonomialOp& op) { return Json{{"perm", op.perm_one_based()}, {"locals", op.local_names()}}; }

MonomialOp op_from_json(const Json& j) {
    std::vector<LocalClifford> locals;
    for (const auto& name : j.at("locals")) locals.push_back(local_from_name(name.get<std::string>()));
    return MonomialOp::from_one_based(j.at("perm").get<std::vector<int>>(), locals);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string perm_text(const MonomialOp& op) {
    std::vector<std::string> p;
    for (int v : op.perm_one_based()) p.push_back(std::to_string(v));
    return "(" + join(p, ",") + ")";
}

std::string circuit_text(const MonomialOp& op) { return perm_text(op) + "; " + join(op.local_names(), ", "); }

Json header(const StabCode& code, const std::string& name) {
    return Json{{"code", name}, {"n", code.n()}, {"k", code.k()}};
}

Json row_json(const OptResult& r) {
    return Json{{"class", r.cls.index},
                {"cost", r.cost},
                {"circuit", op_json(r.circuit)},
                {"tau", op_json(r.tau)},
                {"A", bin_rows(r.a.mat())},
                {"generator_basis", r.code_out.generator_basis().to_strings()},
                {"L", bin_rows(r.realized.L.mat())},
                {"exhaustive", r.exhaustive}};
}

void emit_rows(const Config& cfg, const StabCode& code, const Metric& metric, const std::vector<OptResult>& rows) {
    if (cfg.format == "json") {
        Json j = header(code, cfg.code);
        j["metric"] = Json{{"kind", metric.name()}, {"swap_weight", metric.swap_weight}};
        j["rows"] = Json::array();
        for (const auto& r : rows) j["rows"].push_back(row_json(r));
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "md") {
        const std::string cost_col = metric.swap_weight ? std::to_string(metric.swap_weight) + "|s| + |e|" : "|e|";
        std::cout << "| Code | Class | Physical Circuit | " << cost_col << " | Generator-Basis Matrix | L |\n";
        std::cout << "|---|---|---|---|---|---|\n";
        for (const auto& r : rows) {
            const auto g = r.code_out.generators().to_strings();
            const auto b = r.code_out.basis().to_strings();
            std::vector<std::string> lrows;
            for (size_t i = 0; i < r.realized.L.mat().rows(); ++i) lrows.push_back(bits(r.realized.L.mat(), i));
            std::cout << "| " << cfg.code << " | " << r.cls.index << " | " << circuit_text(r.circuit) << " | " << r.cost
                      << " | " << join(g, "; ") << " / " << join(b, "; ") << " | " << join(lrows, " ") << " |\n";
        }
    } else {
        std::cout << "code,class,cost,perm,locals,tau_perm,tau_locals,exhaustive\n";
        for (const auto& r : rows) {
            std::cout << cfg.code << "," << r.cls.index << "," << r.cost << ",\"" << perm_text(r.circuit) << "\",\""
                      << join(r.circuit.local_names(), " ") << "\",\"" << perm_text(r.tau) << "\",\""
                      << join(r.tau.local_names(), " ") << "\"," << (r.exhaustive ? "true" : "false") << "\n";
        }
    }
}

int cmd_aut(const Config& cfg) {
    const StabCode code = load(cfg);
    const auto g = automorphism_group(code, budget_of(cfg));
    std::vector<MonomialOp> gens;
    if (g.materialized) gens = generating_set(g.elements);
    if (cfg.format == "json") {
        Json j = header(code, cfg.code);
        j["order"] = g.order;
        j["materialized"] = g.materialized;
        j["generators"] = Json::array();
        for (const auto& op : gens) j["generators"].push_back(op_json(op));
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "md") {
        std::cout << "| Code | Order | Generators |\n|---|---|---|\n| " << cfg.code << " | " << g.order << " | ";
        std::vector<std::string> parts;
        for (const auto& op : gens) parts.push_back(circuit_text(op));
        std::cout << join(parts, "<br>") << " |\n";
    } else {
        std::cout << "code,order,generator,perm,locals\n";
        for (size_t i = 0; i < gens.size(); ++i)
            std::cout << cfg.code << "," << g.order << "," << i + 1 << ",\"" << perm_text(gens[i]) << "\",\""
                      << join(gens[i].local_names(), " ") << "\"\n";
        if (gens.empty()) std::cout << cfg.code << "," << g.order << ",,,\n";
    }
    return 0;
}

int cmd_classes(const Config& cfg) {
    const StabCode code = load(cfg);
    const auto classes = classify_automorphisms(code, budget_of(cfg));
    struct Row {
        size_t cls, count, distinct;
    };
    std::vector<Row> rows;
    size_t total_distinct = 0, total = 0;
    for (const auto& [cls, members] : classes) {
        std::set<uint64_t> ls;
        for (const auto& pi : members) ls.insert(logical_packed(pi, code));
        rows.push_back({cls.index, members.size(), ls.size()});
        total_distinct += ls.size();
        total += members.size();
    }
    if (cfg.format == "json") {
        Json j = header(code, cfg.code);
        j["order"] = total;
        j["distinct_L"] = total_distinct;
        j["classes"] = Json::array();
        for (const auto& r : rows)
            j["classes"].push_back(Json{{"class", r.cls}, {"automorphisms", r.count}, {"distinct_L", r.distinct}});
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "md") {
        std::cout << "| Class | Automorphisms | Distinct L |\n|---|---|---|\n";
        for (const auto& r : rows) std::cout << "| " << r.cls << " | " << r.count << " | " << r.distinct << " |\n";
    } else {
        std::cout << "code,class,automorphisms,distinct_L\n";
        for (const auto& r : rows) std::cout << cfg.code << "," << r.cls << "," << r.count << "," << r.distinct << "\n";
    }
    return 0;
}

int cmd_orbit(const Config& cfg) {
    const StabCode code = load(cfg);
    const auto budget = budget_of(cfg);
    const auto g = automorphism_group(code, budget);
    const auto orbit = code_orbit(code, budget);
    const uint64_t size = orbit.entries.size();
    const uint64_t ham = hamming_order(code.n());
    const bool holds = orbit.complete && size * g.order == ham;
    if (cfg.format == "json") {
        Json j = header(code, cfg.code);
        j["orbit"] = size;
        j["complete"] = orbit.complete;
        j["aut_order"] = g.order;
        j["hamming_order"] = ham;
        j["identity_holds"] = holds;
        j["layers"] = orbit.entries.empty() ? 0 : orbit.entries.back().layer + 1;
        std::cout << j.dump(2) << "\n";
    } else if (cfg.format == "md") {
        std::cout << "| Code | Orbit | Aut order | 6^n n! | Holds |\n|---|---|---|---|---|\n";
        std::cout << "| " << cfg.code << " | " << size << (orbit.complete ? "" : "+") << " | " << g.order << " | " << ham
                  << " | " << (holds ? "yes" : "no") << " |\n";
    } else {
        std::cout << "code,orbit,complete,aut_order,hamming_order,identity_holds\n"
                  << cfg.code << "," << size << "," << orbit.complete << "," << g.order << "," << ham << "," << holds << "\n";
    }
    if (!orbit.complete) {
        std::cerr << "orbit truncated at " << size << " entries (budget)\n";
        return 2;
    }
    return 0;
}

int cmd_optimize(const Config& cfg) {
    const StabCode code = load(cfg);
    const Metric metric = metric_of(cfg);
    const auto r = optimize(code, ClassId{code.k(), cfg.cls}, metric, budget_of(cfg));
    emit_rows(cfg, code, metric, {r});
    return 0;
}

int cmd_table(const Config& cfg) {
    const StabCode code = load(cfg);
    const Metric metric = metric_of(cfg);
    emit_rows(cfg, code, metric, full_table(code, metric, cfg.include_identity, budget_of(cfg)));
    return 0;
}

int cmd_verify(const Config& cfg) {
    Json j;
    try {
        if (cfg.input == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(cfg.input);
            if (!in) throw InputError("cannot open " + cfg.input);
            j = Json::parse(in);
        }
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("not valid JSON: ") + e.what());
    }
    const size_t n = j.at("n").get<size_t>();
    const size_t k = j.at("k").get<size_t>();
    Metric metric = j.at("metric").at("kind") == "local_clifford" ? Metric::local_clifford() : Metric::controlled_clifford();
    metric.swap_weight = j.at("metric").at("swap_weight").get<unsigned>();
    std::optional<StabCode> source;
    try {
        source = resolve_code(j.at("code").get<std::string>());
    } catch (const std::exception&) {
    }

    size_t ok = 0, bad = 0;
    for (const auto& row : j.at("rows")) {
        std::string problem;
        try {
            const auto gb = row.at("generator_basis").get<std::vector<std::string>>();
            const Gf4Matrix m = Gf4Matrix::from_strings(gb);
            StabCode out(n, k, m.row_slice(0, n - k), m.row_slice(n - k, 2 * k));
            const BinMatrix l = BinMatrix::from_strings(row.at("L").get<std::vector<std::string>>());
            OptResult r{ClassId{k, row.at("class").get<size_t>()},
                        row.at("cost").get<unsigned>(),
                        op_from_json(row.at("circuit")),
                        MonomialOp{},
                        op_from_json(row.at("tau")),
                        SympMatrix(BinMatrix::from_strings(row.at("A").get<std::vector<std::string>>())),
                        out,
                        LogicalAction{SympMatrix(l), sp_group(k).class_of(l)},
                        row.at("exhaustive").get<bool>(),
                        {}};
            problem = verify_result(r, metric);
            if (problem.empty() && source) {
                const StabCode expect = transform_code(basis_change(*source, r.a), r.tau);
                if (canonical_key(expect) != canonical_key(out) || expect.basis() != out.basis())
                    problem = "generator-basis matrix is not tau(A B) of the named code";
            }
        } catch (const std::exception& e) {
            problem = e.what();
        }
        if (problem.empty()) {
            ++ok;
        } else {
            ++bad;
            std::cerr << "row class " << row.value("class", 0) << ": " << problem << "\n";
        }
    }
    std::cout << "verified " << ok << " of " << ok + bad << " rows\n";
    return bad ? 1 : 0;
}

int cmd_report(const Config& cfg) {
    const StabCode code = load(cfg);
    const auto classes = classify_automorphisms(code, budget_of(cfg));
    const Metric m1 = Metric::from_number(1), m2 = Metric::from_number(2);
    auto lstring = [&](uint64_t p) {
        const BinMatrix l = packed::unpack(p, code.k());
        std::vector<std::string> rows;
        for (size_t r = 0; r < l.rows(); ++r) rows.push_back(bits(l, r));
        return join(rows, " ");
    };
    if (cfg.kind == "dot") {
        std::cout << "graph classes {\n  node [shape=point];\n";
        for (const auto& [cls, members] : classes) {
            std::map<uint64_t, size_t> per_l;
            for (const auto& pi : members) ++per_l[logical_packed(pi, code)];
            std::cout << "  subgraph cluster_" << cls.index << " {\n    label=\"class " << cls.index << "\";\n";
            for (const auto& [l, count] : per_l) {
                const std::string id = "L" + std::to_string(cls.index) + "_" + std::to_string(l);
                std::cout << "    " << id << " [shape=box, label=\"" << lstring(l) << "\"];\n";
                for (size_t i = 0; i < count; ++i) std::cout << "    " << id << "_" << i << " -- " << id << ";\n";
            }
            std::cout << "  }\n";
        }
        std::cout << "}\n";
        return 0;
    }
    std::cout << "class,L,perm,locals,swaps,cliffords,metric1,metric2,min_cliffords_conjugated\n";
    for (const auto& [cls, members] : classes) {
        for (const auto& pi : members) {
            std::cout << cls.index << ",\"" << lstring(logical_packed(pi, code)) << "\",\"" << perm_text(pi) << "\",\""
                      << join(pi.local_names(), " ") << "\"," << swap_count(pi) << "," << clifford_count(pi) << ","
                      << m1.cost(pi) << "," << m2.cost(pi) << "," << min_cliffords_over_conjugation(pi) << "\n";
        }
    }
    return 0;
}

void set_threads(const Config& cfg) {
    int threads = cfg.threads;
    if (threads <= 0) {
        if (const char* env = std::getenv("AUTOPT_THREADS")) threads = std::atoi(env);
    }
    if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logical Clifford circuit search over equivalent stabiliser codes"};
    app.require_subcommand(1);
    Config cfg;

    auto add_common = [&](CLI::App* sub, bool needs_code) {
        auto* opt = sub->add_option("--code", cfg.code, "builtin code name or code file");
        if (needs_code) opt->required();
        sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "md", "csv"}));
        sub->add_option("--threads", cfg.threads, "worker threads (default: AUTOPT_THREADS or all cores)");
        sub->add_option("--max-nodes", cfg.max_nodes, "automorphism search node budget");
        sub->add_option("--max-orbit", cfg.max_orbit, "orbit entry budget");
        sub->add_flag("--allow-large", cfg.allow_large, "accept n > 7 or k > 2");
    };
    auto add_metric = [&](CLI::App* sub) {
        sub->add_option("--metric", cfg.metric, "1: controlled-Clifford, 2: local Clifford")->check(CLI::Range(1, 2));
        sub->add_option("--swap-weight", cfg.swap_weight, "SWAP weight override")->check(CLI::NonNegativeNumber);
    };

    auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
    add_common(aut, true);
    auto* classes = app.add_subcommand("classes", "automorphisms per conjugacy class");
    add_common(classes, true);
    auto* orbit = app.add_subcommand("orbit", "number of distinct equivalent codes");
    add_common(orbit, true);
    auto* opt = app.add_subcommand("optimize", "cheapest circuit for one class");
    add_common(opt, true);
    add_metric(opt);
    opt->add_option("--class", cfg.cls, "class label")->required()->check(CLI::PositiveNumber);
    auto* table = app.add_subcommand("table", "cheapest circuit for every class");
    add_common(table, true);
    add_metric(table);
    table->add_flag("--include-identity", cfg.include_identity, "also emit class 1");
    auto* verify = app.add_subcommand("verify", "re-check emitted JSON rows");
    verify->add_option("input", cfg.input, "JSON file, or - for stdin")->required();
    auto* report = app.add_subcommand("report", "class groupings as CSV or DOT");
    add_common(report, true);
    report->add_option("--kind", cfg.kind, "csv or dot")->check(CLI::IsMember({"csv", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    set_threads(cfg);
    try {
        if (*aut) return cmd_aut(cfg);
        if (*classes) return cmd_classes(cfg);
        if (*orbit) return cmd_orbit(cfg);
        if (*opt) return cmd_optimize(cfg);
        if (*table) return cmd_table(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*report) return cmd_report(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
