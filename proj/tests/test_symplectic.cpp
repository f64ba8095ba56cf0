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

#include <algorithm>
#include <random>
#include <set>

#include "autopt/symplectic.hpp"
#include "doctest.h"

using namespace autopt;

namespace {

// All 2k x 2k binary matrices with M Omega M^T = Omega, checked with dense
// BinMatrix products.
std::vector<uint64_t> brute_sp(size_t k) {
    const size_t w = 2 * k;
    const BinMatrix om = BinMatrix::omega(k);
    std::vector<uint64_t> out;
    for (uint64_t bits = 0; bits < (uint64_t{1} << (w * w)); ++bits) {
        std::vector<uint64_t> rows(w);
        for (size_t r = 0; r < w; ++r) rows[r] = (bits >> (w * r)) & ((uint64_t{1} << w) - 1);
        const BinMatrix m(w, rows);
        if (m * om * m.transpose() == om) out.push_back(bits);
    }
    return out;
}

std::multiset<size_t> sizes(const SpGroup& g) {
    std::multiset<size_t> out;
    for (size_t c = 1; c <= g.class_count(); ++c) out.insert(g.class_size(c));
    return out;
}

}  // namespace

TEST_CASE("group orders") {
    CHECK(sp_order_formula(1) == 6);
    CHECK(sp_order_formula(2) == 720);
    CHECK(sp_order_formula(3) == 1451520);
    CHECK(sp_group(1).order() == 6);
    CHECK(sp_group(2).order() == 720);
    CHECK_THROWS(enumerate_sp(0));
    CHECK_THROWS(enumerate_sp(4));
}

TEST_CASE("closure agrees with brute force for k <= 2") {
    CHECK(enumerate_sp(1) == brute_sp(1));
    CHECK(enumerate_sp(2) == brute_sp(2));
}

TEST_CASE("class sizes") {
    CHECK(sizes(sp_group(1)) == std::multiset<size_t>{1, 2, 3});
    CHECK(sizes(sp_group(2)) == std::multiset<size_t>{1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144});
    // Table order.
    const std::vector<size_t> table_sizes = {1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144};
    for (size_t c = 1; c <= 11; ++c) CHECK(sp_group(2).class_size(c) == table_sizes[c - 1]);
    CHECK(sp_group(1).class_size(2) == 2);
    CHECK(sp_group(1).class_size(3) == 3);
    for (size_t k = 1; k <= 2; ++k) {
        const auto& g = sp_group(k);
        CHECK(g.class_of(BinMatrix::identity(2 * k)).index == 1);
        CHECK(g.class_size(1) == 1);
        size_t total = 0;
        for (const auto& cls : conjugacy_classes(g)) total += cls.size();
        CHECK(total == g.order());
    }
}

TEST_CASE("table representatives land in their own classes") {
    for (size_t k = 1; k <= 2; ++k) {
        const auto table = table_representatives(k);
        std::set<size_t> labels;
        size_t unplaced = 0;
        for (size_t t = 0; t < table.size(); ++t) {
            const auto m = BinMatrix::from_strings(table[t]);
            if (!SympMatrix::is_symplectic(m)) {
                ++unplaced;
                CHECK_THROWS(sp_group(k).class_of(m));
                continue;
            }
            CHECK(sp_group(k).class_of(m).index == t + 1);
            CHECK(sp_group(k).representative(t + 1).mat() == m);
            labels.insert(sp_group(k).class_of(m).index);
        }
        CHECK(labels.size() + unplaced == table.size());
        // Only the class 3 and class 4 entries of the k = 2 table are affected.
        CHECK(unplaced == (k == 2 ? 2 : 0));
    }
}

TEST_CASE("class_of examples") {
    CHECK(sp_group(2).class_of(BinMatrix::from_strings({"1100", "0100", "0110", "1111"})).index == 6);
    CHECK(sp_group(1).class_of(BinMatrix::from_strings({"11", "01"})).index == 3);
    // {H, S, HSH} is class 3 and {SH, HS} is class 2.
    CHECK(sp_group(1).class_of(BinMatrix::from_strings({"01", "10"})).index == 3);
    CHECK(sp_group(1).class_of(BinMatrix::from_strings({"10", "11"})).index == 3);
    CHECK(sp_group(1).class_of(BinMatrix::from_strings({"01", "11"})).index == 2);
    CHECK(sp_group(1).class_of(BinMatrix::from_strings({"11", "10"})).index == 2);
    CHECK_THROWS(sp_group(2).class_of(BinMatrix::from_strings({"1100", "1100", "0010", "0001"})));
    CHECK_THROWS(sp_group(2).class_of(BinMatrix::identity(2)));
}

TEST_CASE("transpose stays in class") {
    for (size_t k = 1; k <= 2; ++k) {
        const auto& g = sp_group(k);
        for (uint64_t e : g.elements()) CHECK(g.label_of_packed(packed::transpose(e, k)) == g.label_of_packed(e));
    }
}

TEST_CASE("class membership is conjugation invariant") {
    const auto& g = sp_group(2);
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 1000; ++rep) {
        const uint64_t x = g.elements()[rng() % g.order()];
        const uint64_t l = g.elements()[rng() % g.order()];
        const uint64_t conj = packed::mul(packed::mul(packed::symp_inverse(x, 2), l, 2), x, 2);
        CHECK(g.label_of_packed(conj) == g.label_of_packed(l));
        CHECK(packed::mul(x, packed::symp_inverse(x, 2), 2) == packed::identity(2));
    }
}

TEST_CASE("find_conjugator") {
    const auto& g = sp_group(2);
    const auto l1 = BinMatrix::from_strings({"1111", "0110", "0010", "0011"});
    const auto l2 = BinMatrix::from_strings({"1100", "0100", "0110", "1111"});
    const auto a = g.find_conjugator(l1, l2);
    REQUIRE(a.has_value());
    const BinMatrix at = a->mat().transpose();
    CHECK(a->inverse().mat().transpose() * l1 * at == l2);

    // The anti-diagonal witness also satisfies the identity.
    const auto anti = SympMatrix(BinMatrix::from_strings({"0001", "0010", "0100", "1000"}));
    CHECK(anti.inverse().mat().transpose() * l1 * anti.mat().transpose() == l2);

    const auto id = g.find_conjugator(BinMatrix::identity(4), BinMatrix::identity(4));
    REQUIRE(id.has_value());
    CHECK(id->mat() == BinMatrix::identity(4));

    CHECK_FALSE(sp_group(1)
                    .find_conjugator(BinMatrix::from_strings({"01", "11"}), BinMatrix::from_strings({"01", "10"}))
                    .has_value());
}

TEST_CASE("find_conjugator witnesses satisfy the identity across the group") {
    const auto& g = sp_group(2);
    std::mt19937_64 rng(10);
    for (int rep = 0; rep < 200; ++rep) {
        const uint64_t l = g.elements()[rng() % g.order()];
        const uint64_t x = g.elements()[rng() % g.order()];
        const uint64_t target = packed::mul(packed::mul(x, l, 2), packed::symp_inverse(x, 2), 2);
        const auto a = g.find_conjugator(packed::unpack(l, 2), packed::unpack(target, 2));
        REQUIRE(a.has_value());
        CHECK(a->inverse().mat().transpose() * packed::unpack(l, 2) * a->mat().transpose() == packed::unpack(target, 2));
    }
}

TEST_CASE("k = 3 classes partition the group") {
    const auto& g = sp_group(3);
    CHECK(g.order() == 1451520);
    size_t total = 0;
    for (size_t c = 1; c <= g.class_count(); ++c) total += g.class_size(c);
    CHECK(total == g.order());
    CHECK(g.class_size(1) == 1);
    CHECK(g.class_of(BinMatrix::identity(6)).index == 1);
    for (size_t c = 2; c <= g.class_count(); ++c) CHECK(g.class_size(c - 1) <= g.class_size(c));
}
