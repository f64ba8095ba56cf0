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

#ifndef AUTOPT_GF4_HPP
#define AUTOPT_GF4_HPP

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace autopt {

/// Element of GF(4) = {0, 1, w, w^2} stored as the bit pair (x, z) of x + w z.
///
/// Bit 0 holds x and bit 1 holds z, so 0 = 0b00, 1 = 0b01, w = 0b10 and
/// w^2 = w + 1 = 0b11. Field addition is XOR and the binary image of an
/// element is just its two bits.
class Gf4 {
public:
    constexpr Gf4() = default;
    static constexpr Gf4 from_bits(bool x, bool z) { return Gf4(static_cast<uint8_t>(x | (z << 1))); }
    static constexpr Gf4 from_code(uint8_t code) { return Gf4(static_cast<uint8_t>(code & 3)); }

    constexpr uint8_t code() const { return bits_; }
    constexpr bool x() const { return bits_ & 1; }
    constexpr bool z() const { return (bits_ >> 1) & 1; }
    constexpr bool is_zero() const { return bits_ == 0; }

    friend constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(Gf4 a, Gf4 b) = default;
    Gf4& operator+=(Gf4 other) {
        bits_ ^= other.bits_;
        return *this;
    }

    /// Token used by the code file format: 0, 1, w, W (W is w^2).
    char token() const;
    static Gf4 from_token(char c);

private:
    constexpr explicit Gf4(uint8_t bits) : bits_(bits) {}
    uint8_t bits_ = 0;
};

inline constexpr Gf4 kZero = Gf4::from_code(0);
inline constexpr Gf4 kOne = Gf4::from_code(1);
inline constexpr Gf4 kW = Gf4::from_code(2);
inline constexpr Gf4 kW2 = Gf4::from_code(3);

Gf4 gf4_mul(Gf4 a, Gf4 b);

/// Frobenius map x -> x^2; swaps w and w^2.
constexpr Gf4 gf4_conj(Gf4 a) { return Gf4::from_bits(a.x() ^ a.z(), a.z()); }

/// Tr(a) = a + a^2. Zero on {0, 1}, one on {w, w^2}; equals the z bit.
constexpr bool gf4_trace(Gf4 a) { return a.z(); }

/// Dense binary matrix with at most 64 columns; row i is a bit mask with
/// column j at bit j.
///
/// Length-2n vectors use the layout (x_1..x_n | z_1..z_n): x_j at bit j and
/// z_j at bit n + j.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(size_t rows, size_t cols);
    BinMatrix(size_t cols, std::vector<uint64_t> row_masks);

    static BinMatrix identity(size_t m);
    /// Omega_{2m} = [[0, I_m], [I_m, 0]].
    static BinMatrix omega(size_t m);
    /// Parses rows of '0'/'1' characters; whitespace inside a row is ignored.
    static BinMatrix from_strings(std::initializer_list<std::string> rows);
    static BinMatrix from_strings(const std::vector<std::string>& rows);

    size_t rows() const { return rows_.size(); }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const { return (rows_[r] >> c) & 1u; }
    void set(size_t r, size_t c, bool v);
    uint64_t row(size_t r) const { return rows_[r]; }
    void set_row(size_t r, uint64_t mask) { rows_[r] = mask & col_mask(); }
    const std::vector<uint64_t>& row_masks() const { return rows_; }

    uint64_t col_mask() const { return cols_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << cols_) - 1); }

    BinMatrix transpose() const;
    BinMatrix operator*(const BinMatrix& rhs) const;
    BinMatrix operator+(const BinMatrix& rhs) const;
    bool operator==(const BinMatrix& rhs) const = default;

    size_t rank() const;
    bool is_zero() const;

    /// One string per row, columns left to right, e.g. "1100".
    std::vector<std::string> to_strings() const;
    std::string str() const;

private:
    size_t cols_ = 0;
    std::vector<uint64_t> rows_;
};

/// Matrix over GF(4) whose row space is read additively (GF(2)-linear spans).
class Gf4Matrix {
public:
    Gf4Matrix() = default;
    Gf4Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Gf4Matrix(std::initializer_list<std::initializer_list<Gf4>> rows);

    /// Rows are whitespace-separated tokens from {0, 1, w, W}.
    static Gf4Matrix from_strings(const std::vector<std::string>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Gf4 at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    Gf4& at(size_t r, size_t c) { return data_[r * cols_ + c]; }

    /// Packs row r as (x mask, z mask) bits, i.e. the row of phi(M).
    uint64_t packed_row(size_t r) const;
    void set_packed_row(size_t r, uint64_t mask);

    Gf4Matrix row_slice(size_t first, size_t count) const;
    static Gf4Matrix vstack(const Gf4Matrix& top, const Gf4Matrix& bottom);

    Gf4Matrix operator+(const Gf4Matrix& rhs) const;
    bool operator==(const Gf4Matrix& rhs) const = default;

    /// One line per row in file tokens, e.g. "1 w 0 W".
    std::vector<std::string> to_strings() const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Gf4> data_;
};

/// phi(x + w z) = (x | z), applied row-wise.
BinMatrix phi(const Gf4Matrix& m);
Gf4Matrix phi_inv(const BinMatrix& m);

/// x.z' + z.x' mod 2 for two 1 x 2n row vectors.
bool symp_product(const BinMatrix& u, const BinMatrix& v);

/// Symplectic product of two packed length-2n rows.
inline bool symp_packed(uint64_t u, uint64_t v, unsigned n) {
    const uint64_t low = (uint64_t{1} << n) - 1;
    const uint64_t cross = ((u & low) & (v >> n)) ^ ((u >> n) & (v & low));
    return __builtin_parityll(cross);
}

/// [U (.) V^T]_{ij} = Tr(u_i . conj(v_j)).
BinMatrix trace_product(const Gf4Matrix& u, const Gf4Matrix& v);

/// Reduced row echelon form over GF(2). Pivot columns are taken left to
/// right; the pivot row is the lowest-index remaining row with a one there.
/// Zero rows are kept at the bottom so the shape is preserved.
BinMatrix rref2(const BinMatrix& m);

/// GF(2) rank of a set of packed rows.
size_t rank_packed(std::vector<uint64_t> rows);

}  // namespace autopt

#endif  // AUTOPT_GF4_HPP
