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
#include <set>

#include "autopt/codes.hpp"
#include "autopt/monomial.hpp"
#include "doctest.h"

using namespace autopt;
using L = LocalClifford;

namespace {

MonomialOp random_op(std::mt19937_64& rng, size_t n) { return hamming_element(n, rng() % hamming_order(n)); }

Gf4Matrix random_matrix(std::mt19937_64& rng, size_t r, size_t c) {
    Gf4Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) m.at(i, j) = Gf4::from_code(static_cast<uint8_t>(rng() & 3));
    }
    return m;
}

// Action read straight off the S_3n form: the nonzero value v in column j
// goes to point p[3j + v - 1], i.e. column (p - 1) / 3 with value (p - 1) % 3 + 1.
Gf4Matrix apply_via_s3n(const MonomialOp& op, const Gf4Matrix& m) {
    const auto p = to_s3n(op);
    Gf4Matrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t j = 0; j < m.cols(); ++j) {
            const uint8_t v = m.at(r, j).code();
            if (!v) continue;
            const int img = p[3 * j + v - 1] - 1;
            out.at(r, static_cast<size_t>(img / 3)) = Gf4::from_code(static_cast<uint8_t>(img % 3 + 1));
        }
    }
    return out;
}

MonomialOp pi46() { return MonomialOp::from_one_based({2, 3, 4, 1}, {L::HSH, L::HSH, L::HSH, L::HSH}); }

}  // namespace

TEST_CASE("local Clifford table") {
    // Residues mod 3 of the images of the block (1, w, w^2).
    const std::vector<std::pair<L, std::array<int, 3>>> table = {
        {L::I, {1, 2, 0}}, {L::HSH, {1, 0, 2}}, {L::SH, {2, 0, 1}},
        {L::S, {0, 2, 1}}, {L::HS, {0, 1, 2}},  {L::H, {2, 1, 0}},
    };
    for (const auto& [c, residues] : table) {
        CAPTURE(local_name(c));
        const auto p = to_s3n(MonomialOp::from_one_based({1}, {c}));
        for (size_t i = 0; i < 3; ++i) CHECK(p[i] % 3 == residues[i]);
        CHECK(from_s3n(p).local(0) == c);
    }
    CHECK(local_apply(L::HSH, kW) == kW2);
    CHECK(local_apply(L::SH, kOne) == kW);
    CHECK(local_apply(L::HS, kOne) == kW2);
    CHECK(local_apply(L::H, kOne) == kW);
    CHECK(local_apply(L::H, kW2) == kW2);
    std::set<std::array<bool, 4>> mats;
    for (L c : kAllLocals) {
        const auto m = local_matrix(c);
        mats.insert({m.a, m.b, m.c, m.d});
        CHECK((m.a && m.d) != (m.b && m.c));  // determinant 1
        CHECK(local_mul(c, local_inv(c)) == L::I);
        CHECK(local_from_name(local_name(c)) == c);
    }
    CHECK(mats.size() == 6);
}

TEST_CASE("S_3n conversion examples") {
    const MonomialOp op = from_s3n({4, 6, 5, 7, 9, 8, 10, 12, 11, 1, 3, 2});
    CHECK(op == pi46());
    CHECK(to_s3n(pi46()) == std::vector<int>{4, 6, 5, 7, 9, 8, 10, 12, 11, 1, 3, 2});

    std::vector<int> id(12);
    for (int i = 0; i < 12; ++i) id[i] = i + 1;
    CHECK(from_s3n(id) == MonomialOp::identity(4));
    CHECK(to_s3n(MonomialOp::identity(4)) == id);

    const MonomialOp gen = from_s3n(perm_from_cycles("(7,10)(8,11)(9,12)", 12));
    CHECK(gen == MonomialOp::from_one_based({1, 2, 4, 3}, {L::I, L::I, L::I, L::I}));
    const MonomialOp swap12 = from_s3n(perm_from_cycles("(1,4)(2,5)(3,6)", 12));
    CHECK(swap12 == MonomialOp::from_one_based({2, 1, 3, 4}, {L::I, L::I, L::I, L::I}));

    CHECK_THROWS(from_s3n({1, 4, 3, 2, 5, 6}));  // block spans two destinations
    CHECK_THROWS(from_s3n({1, 2}));
    CHECK_THROWS(from_s3n({1, 1, 2}));
}

TEST_CASE("S_3n round trip on random ops") {
    std::mt19937_64 rng(1);
    for (int rep = 0; rep < 1000; ++rep) {
        const MonomialOp op = random_op(rng, 7);
        CHECK(from_s3n(to_s3n(op)) == op);
        CHECK(hamming_element(7, hamming_index(op)) == op);
    }
}

TEST_CASE("hamming indexing is a bijection for n = 3") {
    std::set<MonomialOp> all;
    for (uint64_t i = 0; i < hamming_order(3); ++i) {
        const MonomialOp op = hamming_element(3, i);
        CHECK(hamming_index(op) == i);
        all.insert(op);
    }
    CHECK(all.size() == 1296);
    CHECK(hamming_order(4) == 31104);
}

TEST_CASE("text form") {
    const MonomialOp op = MonomialOp::from_one_based({2, 1, 3, 4}, {L::I, L::I, L::HSH, L::HSH});
    CHECK(op.str() == "perm=[2,1,3,4] locals=[I,I,HSH,HSH]");
    CHECK(MonomialOp::parse(op.str()) == op);
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 200; ++rep) {
        const MonomialOp r = random_op(rng, 1 + rng() % 7);
        CHECK(MonomialOp::parse(r.str()) == r);
    }
    CHECK_THROWS(MonomialOp::parse("perm=[1,1] locals=[I,I]"));
    CHECK_THROWS(MonomialOp::parse("perm=[1,2] locals=[I,X]"));
    CHECK_THROWS(MonomialOp::parse("perm=[1,2]"));
}

TEST_CASE("group law") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 1000; ++rep) {
        const size_t n = 1 + rng() % 7;
        const MonomialOp a = random_op(rng, n);
        const MonomialOp b = random_op(rng, n);
        CHECK(compose(a, MonomialOp::identity(n)) == a);
        CHECK(compose(MonomialOp::identity(n), a) == a);
        CHECK(compose(a, inverse(a)).is_identity());
        CHECK(compose(inverse(a), a).is_identity());
        // Composition of the S_3n permutations, b first.
        const auto pa = to_s3n(a);
        const auto pb = to_s3n(b);
        std::vector<int> pab(pa.size());
        for (size_t i = 0; i < pa.size(); ++i) pab[i] = pa[pb[i] - 1];
        CHECK(to_s3n(compose(a, b)) == pab);
    }
    CHECK_THROWS(compose(MonomialOp::identity(2), MonomialOp::identity(3)));
}

TEST_CASE("apply examples") {
    const auto b = Gf4Matrix::from_strings({"1 1 0 0", "W w 0 0", "W 0 w 0", "1 0 1 0"});
    const MonomialOp op = MonomialOp::from_one_based({2, 1, 3, 4}, {L::I, L::I, L::HSH, L::HSH});
    CHECK(apply(op, b) == Gf4Matrix::from_strings({"1 1 0 0", "w W 0 0", "0 W W 0", "0 1 1 0"}));
    CHECK(apply(MonomialOp::identity(4), b) == b);

    const StabCode code = builtin("4_2_2");
    CHECK(apply(pi46(), code.basis()) == Gf4Matrix::from_strings({"0 1 1 0", "0 W W 0", "0 W 0 W", "0 1 0 1"}));
    CHECK_THROWS(apply(MonomialOp::identity(3), b));
}

TEST_CASE("apply agrees with the S_3n action and is a group action") {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 500; ++rep) {
        const size_t n = 1 + rng() % 7;
        const MonomialOp a = random_op(rng, n);
        const MonomialOp b = random_op(rng, n);
        const auto m = random_matrix(rng, 3, n);
        CHECK(apply(a, m) == apply_via_s3n(a, m));
        CHECK(apply(compose(a, b), m) == apply(a, apply(b, m)));
        for (size_t r = 0; r < m.rows(); ++r) CHECK(apply_packed(a, m.packed_row(r)) == apply(a, m).packed_row(r));
    }
}

TEST_CASE("lift of pi46 matches the reference matrix") {
    const auto expected = BinMatrix::from_strings(
        {"00010001", "10001000", "01000100", "00100010", "00000001", "00001000", "00000100", "00000010"});
    CHECK(lift_symplectic(pi46()).mat() == expected);
    const StabCode code = builtin("4_2_2");
    CHECK(phi(code.basis()) * expected.transpose() == phi(apply(pi46(), code.basis())));
    CHECK(lift_symplectic(MonomialOp::identity(4)).mat() == BinMatrix::identity(8));
    CHECK(lift_symplectic(MonomialOp::from_one_based({1}, {L::H})).mat() == BinMatrix::from_strings({"01", "10"}));
}

TEST_CASE("lift contract, symplecticity and anti-order law") {
    // Exhaustive single-qubit cases: 6 locals x 4 vectors.
    for (L c : kAllLocals) {
        const MonomialOp op = MonomialOp::from_one_based({1}, {c});
        for (uint8_t v = 0; v < 4; ++v) {
            Gf4Matrix m(1, 1);
            m.at(0, 0) = Gf4::from_code(v);
            CHECK(phi(apply(op, m)) == phi(m) * lift_symplectic(op).mat().transpose());
        }
    }
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 1000; ++rep) {
        const size_t n = 1 + rng() % 7;
        const MonomialOp a = random_op(rng, n);
        const MonomialOp b = random_op(rng, n);
        const auto fa = lift_symplectic(a).mat();
        const auto om = BinMatrix::omega(n);
        CHECK(fa * om * fa.transpose() == om);
        CHECK(lift_symplectic(compose(a, b)).mat() == fa * lift_symplectic(b).mat());
        const auto v = random_matrix(rng, 2, n);
        CHECK(phi(apply(a, v)) == phi(v) * fa.transpose());
    }
}

TEST_CASE("cost counters") {
    CHECK(swap_count(pi46()) == 3);
    CHECK(clifford_count(pi46()) == 4);
    CHECK(7 * swap_count(pi46()) + clifford_count(pi46()) == 25);
    const MonomialOp p30 = MonomialOp::from_one_based({2, 1, 3, 4}, {L::I, L::I, L::HSH, L::HSH});
    CHECK(swap_count(p30) == 1);
    CHECK(clifford_count(p30) == 2);
    CHECK(7 * swap_count(p30) + clifford_count(p30) == 9);
    CHECK(swap_count(MonomialOp::identity(5)) == 0);
    CHECK(clifford_count(MonomialOp::identity(5)) == 0);
}

TEST_CASE("swap count is a conjugation invariant") {
    const uint64_t order = hamming_order(3);
    size_t mismatches = 0;
    for (uint64_t i = 0; i < order; ++i) {
        const MonomialOp pi = hamming_element(3, i);
        const size_t s = swap_count(pi);
        for (uint64_t j = 0; j < order; ++j) {
            const MonomialOp g = hamming_element(3, j);
            mismatches += swap_count(compose(inverse(g), compose(pi, g))) != s;
        }
    }
    CHECK(mismatches == 0);
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 1000; ++rep) {
        const size_t n = 1 + rng() % 7;
        const MonomialOp pi = random_op(rng, n);
        const MonomialOp g = random_op(rng, n);
        CHECK(swap_count(compose(inverse(g), compose(pi, g))) == swap_count(pi));
    }
}

TEST_CASE("symplectic matrix wrapper") {
    CHECK_THROWS(SympMatrix(BinMatrix::from_strings({"11", "11"})));
    const SympMatrix f = lift_symplectic(pi46());
    CHECK((f * f.inverse()).mat() == BinMatrix::identity(8));
}
