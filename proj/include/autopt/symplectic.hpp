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

#ifndef AUTOPT_SYMPLECTIC_HPP
#define AUTOPT_SYMPLECTIC_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "autopt/gf4.hpp"
#include "autopt/monomial.hpp"

namespace autopt {

/// Conjugacy class label in Sp(2k, 2); index is 1-based.
struct ClassId {
    size_t k = 0;
    size_t index = 0;
    auto operator<=>(const ClassId&) const = default;
};

/// 2k x 2k binary matrices packed into one word: row i occupies bits
/// [2k i, 2k i + 2k), column j of that row at bit 2k i + j.
namespace packed {
uint64_t pack(const BinMatrix& m);
BinMatrix unpack(uint64_t p, size_t k);
uint64_t mul(uint64_t a, uint64_t b, size_t k);
uint64_t transpose(uint64_t a, size_t k);
uint64_t identity(size_t k);
/// Omega A^T Omega.
uint64_t symp_inverse(uint64_t a, size_t k);
bool is_symplectic(uint64_t a, size_t k);
}  // namespace packed

/// Sp(2k, 2) fully materialised, with its conjugacy classes.
///
/// Class labels for k <= 2 follow the representative tables; for k = 3 they
/// are assigned by sorting classes on (size, trace, rank(L + I), least element).
class SpGroup {
public:
    explicit SpGroup(size_t k);

    size_t k() const { return k_; }
    size_t order() const { return elements_.size(); }
    /// Sorted ascending by packed value.
    const std::vector<uint64_t>& elements() const { return elements_; }

    size_t class_count() const { return class_sizes_.size(); }
    size_t class_size(size_t label) const { return class_sizes_.at(label - 1); }
    /// Table matrix where it is symplectic, otherwise the least member.
    SympMatrix representative(size_t label) const;
    std::vector<uint64_t> class_members(size_t label) const;

    /// Throws for non-symplectic input or a size mismatch.
    ClassId class_of(const BinMatrix& l) const;
    size_t label_of_packed(uint64_t p) const;

    /// First A in element order with (A^-1)^T L1 A^T = L2; the identity when
    /// L1 = L2.
    std::optional<SympMatrix> find_conjugator(const BinMatrix& l1, const BinMatrix& l2) const;

private:
    size_t position(uint64_t p) const;

    size_t k_;
    std::vector<uint64_t> elements_;
    std::vector<uint16_t> label_;  // per element, 1-based
    std::vector<size_t> class_sizes_;
    std::vector<uint64_t> reps_;
};

/// Cached group for k in {1, 2, 3}; built on first use.
const SpGroup& sp_group(size_t k);

/// Closure of the symplectic transvections, sorted; order checked against
/// 2^(k^2) prod (4^i - 1).
std::vector<uint64_t> enumerate_sp(size_t k);

/// Classes ordered by label.
std::vector<std::vector<uint64_t>> conjugacy_classes(const SpGroup& g);

/// Representative tables, rows as bit strings, verbatim. For k = 2
/// the entries of classes 3 and 4 are not symplectic; those classes are
/// identified as the only unlabelled classes of sizes 15 and 40.
std::vector<std::vector<std::string>> table_representatives(size_t k);
std::vector<size_t> table_class_sizes(size_t k);

uint64_t sp_order_formula(size_t k);

}  // namespace autopt

#endif  // AUTOPT_SYMPLECTIC_HPP
