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

#ifndef AUTOPT_MONOMIAL_HPP
#define AUTOPT_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "autopt/gf4.hpp"

namespace autopt {

/// The six single-qubit Cliffords modulo Paulis. Enumerator order is the
/// serialization order used for tie-breaking.
enum class LocalClifford : uint8_t { I = 0, H = 1, S = 2, HS = 3, SH = 4, HSH = 5 };

inline constexpr std::array<LocalClifford, 6> kAllLocals = {LocalClifford::I,  LocalClifford::H,  LocalClifford::S,
                                                            LocalClifford::HS, LocalClifford::SH, LocalClifford::HSH};

const char* local_name(LocalClifford c);
LocalClifford local_from_name(std::string_view name);

/// 2x2 binary matrix [[a, b], [c, d]] acting on a column (x, z).
struct Local2x2 {
    bool a, b, c, d;
};
Local2x2 local_matrix(LocalClifford c);

/// Action on a GF(4) element (0 is always fixed).
Gf4 local_apply(LocalClifford c, Gf4 v);

/// p * q, i.e. q first, then p.
LocalClifford local_mul(LocalClifford p, LocalClifford q);
LocalClifford local_inv(LocalClifford c);

/// Binary matrix with F Omega F^T = Omega, checked at construction.
class SympMatrix {
public:
    SympMatrix() = default;
    explicit SympMatrix(BinMatrix m);

    static SympMatrix identity(size_t half) { return SympMatrix(BinMatrix::identity(2 * half)); }
    static bool is_symplectic(const BinMatrix& m);

    const BinMatrix& mat() const { return m_; }
    size_t half() const { return m_.rows() / 2; }

    SympMatrix operator*(const SympMatrix& rhs) const { return SympMatrix(m_ * rhs.m_); }
    SympMatrix transpose() const { return SympMatrix(m_.transpose()); }
    /// Omega F^T Omega.
    SympMatrix inverse() const;
    bool operator==(const SympMatrix& rhs) const = default;

private:
    BinMatrix m_;
};

inline constexpr size_t kMaxQubits = 16;

/// Element (sigma; rho_1..rho_n) of the wreath product S3 wr S_n.
///
/// perm is 0-based with destination semantics: qubit j is sent to perm[j].
/// Ordering is lexicographic on (n, perm, locals), the same as the text form.
class MonomialOp {
public:
    MonomialOp() = default;
    static MonomialOp identity(size_t n);
    /// perm is 1-based one-line notation.
    static MonomialOp from_one_based(const std::vector<int>& perm, const std::vector<LocalClifford>& locals);

    size_t n() const { return n_; }
    size_t perm(size_t j) const { return perm_[j]; }
    LocalClifford local(size_t j) const { return locals_[j]; }
    void set_perm(size_t j, size_t dest) { perm_[j] = static_cast<uint8_t>(dest); }
    void set_local(size_t j, LocalClifford c) { locals_[j] = c; }

    bool is_identity() const;
    /// Throws if perm is not a permutation.
    void check() const;

    /// "perm=[2,1,3,4] locals=[I,I,HSH,HSH]".
    std::string str() const;
    static MonomialOp parse(std::string_view text);

    std::vector<int> perm_one_based() const;
    std::vector<std::string> local_names() const;

    friend bool operator==(const MonomialOp& a, const MonomialOp& b) { return (a <=> b) == 0; }
    friend std::strong_ordering operator<=>(const MonomialOp& a, const MonomialOp& b);

private:
    uint8_t n_ = 0;
    std::array<uint8_t, kMaxQubits> perm_{};
    std::array<LocalClifford, kMaxQubits> locals_{};
};

struct MonomialOpHash {
    size_t operator()(const MonomialOp& op) const;
};

/// Permutation of {1..3n} split into blocks of three, one per qubit. The
/// block of qubit j holds the images of 1, w, w^2 on that qubit.
MonomialOp from_s3n(const std::vector<int>& p);
std::vector<int> to_s3n(const MonomialOp& op);

/// One-line permutation of {1..m} from disjoint-cycle text, e.g.
/// "(1,4)(2,5)(3,6)"; a -> b for consecutive entries of a cycle.
std::vector<int> perm_from_cycles(std::string_view cycles, size_t m);

/// b first, then a.
MonomialOp compose(const MonomialOp& a, const MonomialOp& b);
MonomialOp inverse(const MonomialOp& a);

/// Locals column-wise, then columns moved: output column perm[j] is column j.
Gf4Matrix apply(const MonomialOp& op, const Gf4Matrix& m);
/// Same action on one packed (x | z) row of width 2n.
uint64_t apply_packed(const MonomialOp& op, uint64_t row);

/// F with phi(apply(op, V)) = phi(V) F^T.
SympMatrix lift_symplectic(const MonomialOp& op);

size_t cycle_count(const MonomialOp& op);
/// n minus the number of cycles of the permutation.
size_t swap_count(const MonomialOp& op);
/// Number of non-identity locals.
size_t clifford_count(const MonomialOp& op);

/// |S3 wr S_n| = 6^n n!.
uint64_t hamming_order(size_t n);
/// Bijection between [0, 6^n n!) and the group: index = perm_rank * 6^n + locals
/// read as a base-6 number (qubit 0 least significant). perm_rank is the
/// lexicographic rank of the one-line permutation.
MonomialOp hamming_element(size_t n, uint64_t index);
uint64_t hamming_index(const MonomialOp& op);

}  // namespace autopt

#endif  // AUTOPT_MONOMIAL_HPP
