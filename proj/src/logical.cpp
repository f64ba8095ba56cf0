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

#include "autopt/logical.hpp"

#include "autopt/autgroup.hpp"

namespace autopt {

uint64_t logical_packed(const MonomialOp& op, const StabCode& code) {
    const size_t n = code.n();
    const size_t w = 2 * code.k();
    const Gf4Matrix dual = dual_basis(code.basis());
    uint64_t out = 0;
    for (size_t j = 0; j < w; ++j) {
        const uint64_t img = apply_packed(op, code.basis().packed_row(j));
        for (size_t i = 0; i < w; ++i)
            if (symp_packed(dual.packed_row(i), img, static_cast<unsigned>(n))) out |= uint64_t{1} << (w * i + j);
    }
    return out;
}

LogicalAction logical_action(const MonomialOp& op, const StabCode& code) {
    if (op.n() != code.n()) throw std::invalid_argument("logical_action: size mismatch");
    if (code.k() == 0 || code.k() > 3) throw std::invalid_argument("logical_action: k must be 1, 2 or 3");
    if (!is_automorphism(op, code)) throw NotAnAutomorphism("logical_action: op " + op.str() + " does not fix the code");
    const BinMatrix l = trace_product(dual_basis(code.basis()), apply(op, code.basis()));
    return {SympMatrix(l), sp_group(code.k()).class_of(l)};
}

StabCode basis_change(const StabCode& code, const SympMatrix& a) {
    const size_t w = 2 * code.k();
    if (a.mat().rows() != w || a.mat().cols() != w) throw std::invalid_argument("basis_change: A has the wrong size");
    Gf4Matrix b(w, code.n());
    for (size_t i = 0; i < w; ++i) {
        uint64_t row = 0;
        for (size_t j = 0; j < w; ++j)
            if (a.mat().get(i, j)) row ^= code.basis().packed_row(j);
        b.set_packed_row(i, row);
    }
    return StabCode(code.n(), code.k(), code.generators(), b, code.name());
}

StabCode transform_code(const StabCode& code, const MonomialOp& tau) {
    if (tau.n() != code.n()) throw std::invalid_argument("transform_code: size mismatch");
    return StabCode(code.n(), code.k(), apply(tau, code.generators()), apply(tau, code.basis()), code.name());
}

MonomialOp conjugate_automorphism(const MonomialOp& tau, const MonomialOp& pi) {
    return compose(tau, compose(pi, inverse(tau)));
}

}  // namespace autopt
