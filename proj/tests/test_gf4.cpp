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

#include <random>

#include "autopt/gf4.hpp"
#include "doctest.h"

using namespace autopt;

namespace {

// Polynomial arithmetic in GF(2)[w]/(w^2 + w + 1); element x + w z as (x, z).
Gf4 poly_mul(Gf4 a, Gf4 b) {
    // (a0 + a1 w)(b0 + b1 w) = a0 b0 + (a0 b1 + a1 b0) w + a1 b1 w^2, w^2 = w + 1.
    const bool c0 = (a.x() & b.x()) ^ (a.z() & b.z());
    const bool c1 = (a.x() & b.z()) ^ (a.z() & b.x()) ^ (a.z() & b.z());
    return Gf4::from_bits(c0, c1);
}

Gf4Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c) {
    Gf4Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Gf4::from_code(static_cast<uint8_t>(rng() & 3));
    }
    return m;
}

}  // namespace

TEST_CASE("gf4 multiplication matches polynomial arithmetic") {
    for (uint8_t a = 0; a < 4; ++a) {
        for (uint8_t b = 0; b < 4; ++b) {
            const Gf4 x = Gf4::from_code(a);
            const Gf4 y = Gf4::from_code(b);
            CHECK(gf4_mul(x, y) == poly_mul(x, y));
            CHECK(gf4_mul(x, y) == gf4_mul(y, x));
        }
        CHECK(gf4_mul(Gf4::from_code(a), kOne) == Gf4::from_code(a));
    }
    CHECK(gf4_mul(kW, kW) == kW2);
    CHECK(gf4_mul(kW, kW2) == kOne);
    CHECK(gf4_mul(kZero, kW) == kZero);
    CHECK(kW + kOne == kW2);
}

TEST_CASE("gf4 trace and conjugation") {
    CHECK_FALSE(gf4_trace(kZero));
    CHECK_FALSE(gf4_trace(kOne));
    CHECK(gf4_trace(kW));
    CHECK(gf4_trace(kW2));
    CHECK(gf4_conj(kW) == kW2);
    CHECK(gf4_conj(kW2) == kW);
    CHECK(gf4_conj(kOne) == kOne);
    CHECK(gf4_conj(kZero) == kZero);
    for (uint8_t a = 0; a < 4; ++a) {
        const Gf4 x = Gf4::from_code(a);
        CHECK(gf4_conj(x) == poly_mul(x, x));
        CHECK(gf4_trace(x) == (x + poly_mul(x, x) == kOne));
    }
}

TEST_CASE("tokens round trip") {
    for (char c : std::string("01wW")) CHECK(Gf4::from_token(c).token() == c);
    CHECK_THROWS_AS(Gf4::from_token('x'), std::invalid_argument);
}

TEST_CASE("phi examples") {
    const auto m = Gf4Matrix::from_strings({"1 w 0"});
    CHECK(phi(m) == BinMatrix::from_strings({"100010"}));
    const auto g = Gf4Matrix::from_strings({"1 1 1 1", "w w w w"});
    CHECK(phi(g) == BinMatrix::from_strings({"11110000", "00001111"}));
    CHECK(phi(Gf4Matrix::from_strings({"W"})) == BinMatrix::from_strings({"11"}));
    CHECK(phi_inv(phi(g)) == g);
}

TEST_CASE("symp_product examples") {
    CHECK(symp_product(BinMatrix::from_strings({"1000"}), BinMatrix::from_strings({"0010"})));
    CHECK_FALSE(symp_product(BinMatrix::from_strings({"1000"}), BinMatrix::from_strings({"0001"})));
    CHECK_THROWS(symp_product(BinMatrix::from_strings({"10"}), BinMatrix::from_strings({"0010"})));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const uint64_t u = rng() & 0x3fff;
        CHECK_FALSE(symp_packed(u, u, 7));
    }
}

TEST_CASE("symp_product equals trace of single-entry pairs") {
    for (uint8_t a = 0; a < 4; ++a) {
        for (uint8_t b = 0; b < 4; ++b) {
            Gf4Matrix u(1, 1);
            Gf4Matrix v(1, 1);
            u.at(0, 0) = Gf4::from_code(a);
            v.at(0, 0) = Gf4::from_code(b);
            const bool tr = gf4_trace(poly_mul(u.at(0, 0), gf4_conj(v.at(0, 0))));
            CHECK(symp_product(phi(u), phi(v)) == tr);
            CHECK(trace_product(u, v).get(0, 0) == tr);
        }
    }
}

TEST_CASE("trace product equals phi Omega phi^T") {
    std::mt19937_64 rng(11);
    for (size_t n = 1; n <= 7; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            const auto u = random_matrix(rng, 1 + rng() % 5, n);
            const auto v = random_matrix(rng, 1 + rng() % 5, n);
            CHECK(trace_product(u, v) == phi(u) * BinMatrix::omega(n) * phi(v).transpose());
        }
    }
    const auto single = Gf4Matrix::from_strings({"1 w"});
    CHECK(trace_product(single, single).is_zero());
    CHECK_THROWS(trace_product(single, Gf4Matrix::from_strings({"1"})));
}

TEST_CASE("phi is additive") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const auto u = random_matrix(rng, 3, 5);
        const auto v = random_matrix(rng, 3, 5);
        CHECK(phi(u + v) == phi(u) + phi(v));
    }
}

TEST_CASE("omega facts") {
    for (size_t m = 1; m <= 7; ++m) {
        const auto om = BinMatrix::omega(m);
        CHECK(om * om == BinMatrix::identity(2 * m));
        CHECK(om.transpose() == om);
    }
}

TEST_CASE("rref2") {
    CHECK(rref2(BinMatrix::identity(5)) == BinMatrix::identity(5));
    CHECK(rref2(BinMatrix::from_strings({"11", "11"})) == BinMatrix::from_strings({"11", "00"}));
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<uint64_t> rows(1 + rng() % 8);
        for (auto& r : rows) r = rng() & 0x3fff;
        const BinMatrix m(14, rows);
        const BinMatrix r = rref2(m);
        CHECK(rref2(r) == r);
        CHECK(r.rank() == m.rank());
        // Same row space: stacking adds no rank.
        auto both = rows;
        both.insert(both.end(), r.row_masks().begin(), r.row_masks().end());
        CHECK(rank_packed(both) == m.rank());
    }
}

TEST_CASE("binary matrix product and transpose") {
    const auto a = BinMatrix::from_strings({"110", "011"});
    const auto b = BinMatrix::from_strings({"10", "01", "11"});
    CHECK(a * b == BinMatrix::from_strings({"11", "10"}));
    CHECK(a.transpose() == BinMatrix::from_strings({"10", "11", "01"}));
    CHECK_THROWS(a * a);
}
