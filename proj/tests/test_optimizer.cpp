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

#include <map>
#include <random>

#include "autopt/optimizer.hpp"
#include "doctest.h"

using namespace autopt;
using L = LocalClifford;

namespace {

using CostTable = std::map<size_t, unsigned>;

CostTable costs(const std::vector<OptResult>& rows) {
    CostTable out;
    for (const auto& r : rows) out[r.cls.index] = r.cost;
    return out;
}

// Reference table cells, keyed by base code. One exception: the [[7,1,3]]
// metric 2 class 2 cell is listed as 2 but the minimum is 1 (see below).
const std::map<std::string, std::pair<CostTable, CostTable>>& expected_costs() {
    static const std::map<std::string, std::pair<CostTable, CostTable>> t = {
        {"4_1_2", {{{2, 15}, {3, 9}}, {{2, 1}, {3, 0}}}},
        {"4_2_2", {{{2, 4}, {4, 4}, {5, 15}, {6, 9}, {9, 10}}, {{2, 0}, {4, 0}, {5, 1}, {6, 0}, {9, 1}}}},
        {"5_1_2", {{{3, 10}}, {{3, 1}}}},
        {"5_1_3", {{{2, 5}, {3, 10}}, {{2, 1}, {3, 1}}}},
        {"5_2_1", {{{2, 14}, {3, 1}, {6, 2}, {7, 15}}, {{2, 0}, {3, 1}, {6, 2}, {7, 1}}}},
        {"5_2_2", {{{2, 4}, {4, 14}, {6, 9}, {9, 16}}, {{2, 0}, {4, 0}, {6, 2}, {9, 2}}}},
        {"6_1_3", {{{2, 15}, {3, 10}}, {{2, 1}, {3, 1}}}},
        {"7_1_3", {{{2, 7}, {3, 7}}, {{2, 1}, {3, 1}}}},
    };
    return t;
}

std::string base_of(const std::string& name) { return name.substr(0, name.find('.')); }

MonomialOp random_op(std::mt19937_64& rng, size_t n) { return hamming_element(n, rng() % hamming_order(n)); }

}  // namespace

TEST_CASE("metrics") {
    const MonomialOp pi46 = MonomialOp::from_one_based({2, 3, 4, 1}, {L::HSH, L::HSH, L::HSH, L::HSH});
    CHECK(Metric::from_number(1).cost(pi46) == 25);
    CHECK(Metric::from_number(2).cost(pi46) == 4);
    CHECK(Metric::controlled_clifford(3).cost(pi46) == 13);
    CHECK(Metric::from_number(1).number() == 1);
    CHECK(Metric::local_clifford().swap_weight == 0);
    CHECK_THROWS(Metric::from_number(3));
}

TEST_CASE("cycle-product count examples") {
    CHECK(min_cliffords_over_conjugation(MonomialOp::identity(5)) == 0);
    CHECK(min_cliffords_over_conjugation(MonomialOp::from_one_based({1, 2}, {L::H, L::I})) == 1);
    // HSH is an involution: the 2-cycle product vanishes, the fixed points stay.
    const MonomialOp pi30 = MonomialOp::from_one_based({2, 1, 3, 4}, {L::HSH, L::HSH, L::HSH, L::HSH});
    CHECK(min_cliffords_over_conjugation(pi30) == 2);
    CHECK(brute_conjugate(pi30).cliffords == 2);
    // SH has order 3.
    CHECK(min_cliffords_over_conjugation(MonomialOp::from_one_based({2, 3, 1}, {L::SH, L::SH, L::SH})) == 0);
    CHECK(min_cliffords_over_conjugation(MonomialOp::from_one_based({2, 3, 1}, {L::SH, L::SH, L::I})) == 1);
}

TEST_CASE("canonical conjugator reaches the count") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 2000; ++rep) {
        const MonomialOp pi = random_op(rng, 1 + rng() % 7);
        const MonomialOp g = canonical_conjugator(pi);
        const MonomialOp c = compose(g, compose(pi, inverse(g)));
        CHECK(clifford_count(c) == min_cliffords_over_conjugation(pi));
        CHECK(c.perm_one_based() == pi.perm_one_based());
    }
}

TEST_CASE("decomposed conjugation search equals brute force") {
    std::mt19937_64 rng(43);
    // Exhaustive over every automorphism of the n <= 4 fixtures.
    for (const auto& name : {"4_1_2", "4_2_2", "4_2_2.m1c6"}) {
        CAPTURE(name);
        for (const auto& pi : automorphism_group(builtin(name)).elements) {
            const auto fast = best_conjugate(pi);
            const auto brute = brute_conjugate(pi);
            CHECK(fast.cliffords == min_cliffords_over_conjugation(pi));
            CHECK(brute.cliffords == fast.cliffords);
            CHECK(brute.circuit == fast.circuit);
            CHECK(brute.g == fast.g);
        }
    }
    // Every seventh element of Ham(3), then random ops on five qubits.
    for (uint64_t i = 0; i < hamming_order(3); i += 7) {
        const MonomialOp pi = hamming_element(3, i);
        const auto fast = best_conjugate(pi);
        const auto brute = brute_conjugate_serial(pi);
        CHECK(brute.cliffords == fast.cliffords);
        CHECK(brute.circuit == fast.circuit);
        CHECK(brute.g == fast.g);
    }
    for (int rep = 0; rep < 40; ++rep) {
        const MonomialOp pi = random_op(rng, 5);
        const auto fast = best_conjugate(pi);
        const auto brute = brute_conjugate(pi);
        CHECK(brute.cliffords == fast.cliffords);
        CHECK(brute.circuit == fast.circuit);
        CHECK(brute.g == fast.g);
        CHECK(compose(fast.g, compose(pi, inverse(fast.g))) == fast.circuit);
    }
}

TEST_CASE("classify automorphisms") {
    const auto classes = classify_automorphisms(builtin("4_2_2"));
    size_t total = 0;
    std::vector<size_t> labels;
    for (const auto& [cls, members] : classes) {
        total += members.size();
        labels.push_back(cls.index);
    }
    CHECK(total == 144);
    CHECK(labels == std::vector<size_t>{1, 2, 4, 5, 6, 9});
    CHECK(classes.at({2, 1}).front() == MonomialOp::identity(4));
    CHECK(classes.at({2, 1}).size() == 4);

    const auto c521 = classify_automorphisms(builtin("5_2_1"));
    for (size_t label : {2, 3, 6, 7}) CHECK(c521.count({2, label}));
}

TEST_CASE("optimize examples") {
    const auto code = builtin("4_2_2");
    const auto r = optimize(code, {2, 6}, Metric::from_number(1));
    CHECK(r.cost == 9);
    CHECK(verify_result(r, Metric::from_number(1)).empty());
    CHECK(r.realized.L == sp_group(2).representative(6));
    CHECK(optimize(code, {2, 1}, Metric::from_number(1)).cost == 0);
    CHECK(optimize(code, {2, 1}, Metric::from_number(2)).circuit == MonomialOp::identity(4));
    CHECK_THROWS_AS(optimize(code, {2, 3}, Metric::from_number(1)), EmptyClass);
    CHECK(optimize(builtin("7_1_3"), {1, 3}, Metric::from_number(2)).cost == 1);
}

TEST_CASE("[[7,1,3]] class 2 under metric 2") {
    // The reference circuit: a 7-cycle with H and S on qubits 3 and 6.
    const auto code = builtin("7_1_3.m2c2");
    const auto listed = MonomialOp::from_one_based({7, 4, 5, 1, 6, 2, 3}, {L::I, L::I, L::H, L::I, L::I, L::S, L::I});
    REQUIRE(is_automorphism(listed, code));
    const auto act = logical_action(listed, code);
    CHECK(act.L.mat() == BinMatrix::from_strings({"01", "11"}));
    CHECK(act.cls == ClassId{1, 2});
    CHECK(Metric::from_number(2).cost(listed) == 2);
    // Both locals lie on one cycle, so a conjugate carries a single HS.
    CHECK(min_cliffords_over_conjugation(listed) == 1);
    const auto best = best_conjugate(listed);
    CHECK(best.cliffords == 1);
    const auto image = transform_code(code, best.g);
    CHECK(is_automorphism(best.circuit, image));
    CHECK(logical_action(best.circuit, image).L.mat() == act.L.mat());

    const auto r = optimize(builtin("7_1_3"), {1, 2}, Metric::from_number(2));
    CHECK(r.cost == 1);
    CHECK(verify_result(r, Metric::from_number(2)).empty());
    // Without code equivalence the listed value is the minimum.
    CHECK(basis_change_costs(code, act.L.mat(), Metric::from_number(2)).begin()->first == 2);
}

TEST_CASE("restricted search levels on the [[4,2,2]] code") {
    const auto code = builtin("4_2_2");
    const BinMatrix target = BinMatrix::from_strings({"1100", "0100", "0110", "1111"});
    const auto fixed = fixed_basis_costs(code, target, Metric::from_number(1));
    CHECK(fixed.count(25));
    CHECK(fixed.at(25) == MonomialOp::from_one_based({2, 3, 4, 1}, {L::HSH, L::HSH, L::HSH, L::HSH}));
    const auto basis = basis_change_costs(code, target, Metric::from_number(1));
    CHECK(basis.begin()->first == 11);
    CHECK(basis.count(25));
    CHECK(optimize(code, {2, 6}, Metric::from_number(1)).cost == 9);
}

TEST_CASE("results tables for every fixture") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        const auto code = builtin(name);
        const auto& want = expected_costs().at(base_of(name));
        for (int m : {1, 2}) {
            CAPTURE(m);
            const auto rows = full_table(code, Metric::from_number(m));
            CHECK(costs(rows) == (m == 1 ? want.first : want.second));
            for (const auto& r : rows) {
                CHECK(verify_result(r, Metric::from_number(m)).empty());
                CHECK(r.exhaustive);
            }
        }
        const auto with_id = full_table(code, Metric::from_number(2), true);
        REQUIRE(!with_id.empty());
        CHECK(with_id.front().cls.index == 1);
        CHECK(with_id.front().cost == 0);
    }
}

TEST_CASE("metric 2 never exceeds metric 1") {
    for (const auto& [name, tables] : expected_costs()) {
        for (const auto& [cls, cost] : tables.first) CHECK(tables.second.at(cls) <= cost);
    }
}

TEST_CASE("brute oracle agrees on the [[4,*]] fixtures") {
    for (const auto& name : {"4_1_2", "4_2_2", "4_2_2.m1c9"}) {
        CAPTURE(name);
        const auto code = builtin(name);
        const auto oracle = brute_oracle_table(code, {Metric::from_number(1), Metric::from_number(2)});
        for (int m : {1, 2}) {
            for (const auto& r : full_table(code, Metric::from_number(m), true)) CHECK(oracle[m - 1].at(r.cls) == r.cost);
        }
    }
    CHECK(brute_oracle(builtin("4_2_2"), {2, 6}, Metric::from_number(1)) == 9);
    CHECK(brute_oracle(builtin("4_2_2"), {2, 1}, Metric::from_number(2)) == 0);
    CHECK_THROWS(brute_oracle(builtin("6_1_3"), {1, 2}, Metric::from_number(1)));
}

TEST_CASE("verify rejects tampered results") {
    auto r = optimize(builtin("4_2_2"), {2, 6}, Metric::from_number(1));
    auto bad = r;
    bad.cost = 8;
    CHECK_FALSE(verify_result(bad, Metric::from_number(1)).empty());
    bad = r;
    bad.circuit = MonomialOp::identity(4);
    CHECK_FALSE(verify_result(bad, Metric::from_number(1)).empty());
}
