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

#ifndef AUTOPT_AUTGROUP_HPP
#define AUTOPT_AUTGROUP_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "autopt/codes.hpp"
#include "autopt/monomial.hpp"

namespace autopt {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    uint64_t max_nodes = 1'000'000'000;
    uint64_t max_orbit = 10'000'000;
    /// Larger groups keep only their order.
    uint64_t max_materialize = 1'000'000;
};

/// True iff apply(op, G) spans the same additive code as G.
bool is_automorphism(const MonomialOp& op, const StabCode& code);

/// Swap of qubits 1 and 2, the cycle qubit j -> j - 1 (qubit 1 -> qubit n),
/// then per qubit the scaling SH and the conjugation HSH: 2 + 2n elements.
std::vector<MonomialOp> hamming_generators(size_t n);

struct AutGroup {
    uint64_t order = 0;
    /// Sorted by serialization; empty unless materialized.
    std::vector<MonomialOp> elements;
    bool materialized = false;
    uint64_t nodes = 0;
};

/// Backtracking over (destination, local) per qubit, most constrained qubit
/// first. A partial assignment survives only if every generator image,
/// restricted to the assigned destinations, lies in the projection of the
/// code onto those columns. Top-level branches run in parallel.
AutGroup automorphism_group(const StabCode& code, const SearchBudget& budget = {});
/// Same search on one thread.
AutGroup automorphism_group_serial(const StabCode& code, const SearchBudget& budget = {});

/// Streams every automorphism in search order.
void for_each_automorphism(const StabCode& code, const std::function<void(const MonomialOp&)>& fn,
                           const SearchBudget& budget = {});

/// Filters all 6^n n! monomial maps; reference for small n.
std::vector<MonomialOp> brute_automorphisms(const StabCode& code);
std::vector<MonomialOp> brute_automorphisms_serial(const StabCode& code);

/// Greedy generating set: sorted elements, each kept if it is not yet in the
/// subgroup generated by the earlier picks.
std::vector<MonomialOp> generating_set(const std::vector<MonomialOp>& group);

/// Closure of a set of elements under composition.
std::vector<MonomialOp> closure(const std::vector<MonomialOp>& gens, size_t n, uint64_t cap = 100'000'000);

struct OrbitEntry {
    MonomialOp tau;
    CanonicalKey key;
    uint32_t layer = 0;
};

struct OrbitResult {
    std::vector<OrbitEntry> entries;
    bool complete = true;
};

/// Breadth-first orbit of the code under hamming_generators, one entry per
/// distinct image code. Each entry keeps the serialization-least tau that
/// reaches it within its layer; entries are ordered by (layer, tau).
/// An overrun of max_orbit returns the entries found so far with complete = false.
OrbitResult code_orbit(const StabCode& code, const SearchBudget& budget = {});
OrbitResult code_orbit_serial(const StabCode& code, const SearchBudget& budget = {});

}  // namespace autopt

#endif  // AUTOPT_AUTGROUP_HPP
