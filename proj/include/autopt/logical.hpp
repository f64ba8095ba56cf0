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

#ifndef AUTOPT_LOGICAL_HPP
#define AUTOPT_LOGICAL_HPP

#include <stdexcept>

#include "autopt/codes.hpp"
#include "autopt/monomial.hpp"
#include "autopt/symplectic.hpp"

namespace autopt {

class NotAnAutomorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct LogicalAction {
    SympMatrix L;
    ClassId cls;
};

/// L = D_B (.) op(B)^T, with its class in Sp(2k, 2). Needs 1 <= k <= 3.
LogicalAction logical_action(const MonomialOp& op, const StabCode& code);

/// The matrix alone, packed as in `packed::`; op must be an automorphism
/// (unchecked). For inner loops.
uint64_t logical_packed(const MonomialOp& op, const StabCode& code);

/// Same G; basis rows replaced by the GF(2) combinations A B.
StabCode basis_change(const StabCode& code, const SympMatrix& a);

/// G and B both mapped through tau.
StabCode transform_code(const StabCode& code, const MonomialOp& tau);

/// tau pi tau^-1, which fixes transform_code(C, tau) whenever pi fixes C.
MonomialOp conjugate_automorphism(const MonomialOp& tau, const MonomialOp& pi);

}  // namespace autopt

#endif  // AUTOPT_LOGICAL_HPP
