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

#include "autopt/gf4.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace autopt {

namespace {

// Indexed by code(): 0, 1, w, w^2. Nonzero elements as powers of w: 1 = w^0.
constexpr std::array<int, 4> kLog = {-1, 0, 1, 2};
constexpr std::array<uint8_t, 3> kExp = {1, 2, 3};

}  // namespace

char Gf4::token() const {
    static constexpr char kTokens[] = {'0', '1', 'w', 'W'};
    return kTokens[bits_];
}

Gf4 Gf4::from_token(char c) {
    switch (c) {
        case '0':
            return kZero;
        case '1':
            return kOne;
        case 'w':
            return kW;
        case 'W':
            return kW2;
        default:
            throw std::invalid_argument(std::string("unknown GF(4) token '") + c + "'");
    }
}

Gf4 gf4_mul(Gf4 a, Gf4 b) {
    if (a.is_zero() || b.is_zero()) return kZero;
    return Gf4::from_code(kExp[(kLog[a.code()] + kLog[b.code()]) % 3]);
}

BinMatrix::BinMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, 0) {
    if (cols > 64) throw std::invalid_argument("BinMatrix supports at most 64 columns");
}

BinMatrix::BinMatrix(size_t cols, std::vector<uint64_t> row_masks) : cols_(cols), rows_(std::move(row_masks)) {
    if (cols > 64) throw std::invalid_argument("BinMatrix supports at most 64 columns");
    for (auto& r : rows_) r &= col_mask();
}

BinMatrix BinMatrix::identity(size_t m) {
    BinMatrix out(m, m);
    for (size_t i = 0; i < m; ++i) out.rows_[i] = uint64_t{1} << i;
    return out;
}

BinMatrix BinMatrix::omega(size_t m) {
    BinMatrix out(2 * m, 2 * m);
    for (size_t i = 0; i < m; ++i) {
        out.rows_[i] = uint64_t{1} << (m + i);
        out.rows_[m + i] = uint64_t{1} << i;
    }
    return out;
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string> rows) {
    return from_strings(std::vector<std::string>(rows));
}

BinMatrix BinMatrix::from_strings(const std::vector<std::string>& rows) {
    std::vector<uint64_t> masks;
    size_t width = 0;
    bool first = true;
    for (const auto& text : rows) {
        uint64_t mask = 0;
        size_t col = 0;
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (c != '0' && c != '1') throw std::invalid_argument("binary row contains '" + std::string(1, c) + "'");
            if (c == '1') mask |= uint64_t{1} << col;
            ++col;
        }
        if (!first && col != width) throw std::invalid_argument("ragged binary matrix");
        width = col;
        first = false;
        masks.push_back(mask);
    }
    return BinMatrix(width, std::move(masks));
}

void BinMatrix::set(size_t r, size_t c, bool v) {
    if (v) {
        rows_[r] |= uint64_t{1} << c;
    } else {
        rows_[r] &= ~(uint64_t{1} << c);
    }
}

BinMatrix BinMatrix::transpose() const {
    BinMatrix out(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) out.rows_[c] |= uint64_t{1} << r;
        }
    }
    return out;
}

BinMatrix BinMatrix::operator*(const BinMatrix& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("BinMatrix product: shape mismatch");
    BinMatrix out(rows_.size(), rhs.cols_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint64_t acc = 0;
        uint64_t bits = rows_[r];
        while (bits) {
            const int c = __builtin_ctzll(bits);
            acc ^= rhs.rows_[c];
            bits &= bits - 1;
        }
        out.rows_[r] = acc;
    }
    return out;
}

BinMatrix BinMatrix::operator+(const BinMatrix& rhs) const {
    if (cols_ != rhs.cols_ || rows_.size() != rhs.rows_.size()) {
        throw std::invalid_argument("BinMatrix sum: shape mismatch");
    }
    BinMatrix out = *this;
    for (size_t r = 0; r < rows_.size(); ++r) out.rows_[r] ^= rhs.rows_[r];
    return out;
}

size_t BinMatrix::rank() const { return rank_packed(rows_); }

bool BinMatrix::is_zero() const {
    for (auto r : rows_) {
        if (r) return false;
    }
    return true;
}

std::vector<std::string> BinMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (size_t r = 0; r < rows_.size(); ++r) {
        std::string s(cols_, '0');
        for (size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) s[c] = '1';
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string BinMatrix::str() const {
    std::ostringstream os;
    for (const auto& row : to_strings()) os << row << '\n';
    return os.str();
}

Gf4Matrix::Gf4Matrix(std::initializer_list<std::initializer_list<Gf4>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged GF(4) matrix");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Gf4Matrix Gf4Matrix::from_strings(const std::vector<std::string>& rows) {
    Gf4Matrix out;
    out.rows_ = rows.size();
    bool first = true;
    for (const auto& text : rows) {
        std::istringstream is(text);
        std::string tok;
        size_t count = 0;
        while (is >> tok) {
            if (tok.size() != 1) throw std::invalid_argument("unknown GF(4) token '" + tok + "'");
            out.data_.push_back(Gf4::from_token(tok[0]));
            ++count;
        }
        if (!first && count != out.cols_) throw std::invalid_argument("ragged GF(4) matrix");
        out.cols_ = count;
        first = false;
    }
    return out;
}

uint64_t Gf4Matrix::packed_row(size_t r) const {
    uint64_t mask = 0;
    for (size_t c = 0; c < cols_; ++c) {
        const Gf4 e = at(r, c);
        if (e.x()) mask |= uint64_t{1} << c;
        if (e.z()) mask |= uint64_t{1} << (cols_ + c);
    }
    return mask;
}

void Gf4Matrix::set_packed_row(size_t r, uint64_t mask) {
    for (size_t c = 0; c < cols_; ++c) {
        at(r, c) = Gf4::from_bits((mask >> c) & 1u, (mask >> (cols_ + c)) & 1u);
    }
}

Gf4Matrix Gf4Matrix::row_slice(size_t first, size_t count) const {
    if (first + count > rows_) throw std::out_of_range("row slice out of range");
    Gf4Matrix out(count, cols_);
    std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
    return out;
}

Gf4Matrix Gf4Matrix::vstack(const Gf4Matrix& top, const Gf4Matrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ && bottom.rows_) {
        throw std::invalid_argument("vstack: column mismatch");
    }
    Gf4Matrix out(top.rows_ + bottom.rows_, top.rows_ ? top.cols_ : bottom.cols_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
    return out;
}

Gf4Matrix Gf4Matrix::operator+(const Gf4Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("GF(4) sum: shape mismatch");
    Gf4Matrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

std::vector<std::string> Gf4Matrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        std::string s;
        for (size_t c = 0; c < cols_; ++c) {
            if (c) s += ' ';
            s += at(r, c).token();
        }
        out.push_back(std::move(s));
    }
    return out;
}

BinMatrix phi(const Gf4Matrix& m) {
    std::vector<uint64_t> rows(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) rows[r] = m.packed_row(r);
    return BinMatrix(2 * m.cols(), std::move(rows));
}

Gf4Matrix phi_inv(const BinMatrix& m) {
    if (m.cols() % 2) throw std::invalid_argument("phi_inv: odd column count");
    Gf4Matrix out(m.rows(), m.cols() / 2);
    for (size_t r = 0; r < m.rows(); ++r) out.set_packed_row(r, m.row(r));
    return out;
}

bool symp_product(const BinMatrix& u, const BinMatrix& v) {
    if (u.rows() != 1 || v.rows() != 1 || u.cols() != v.cols() || u.cols() % 2) {
        throw std::invalid_argument("symp_product: expected two 1 x 2n vectors of equal length");
    }
    return symp_packed(u.row(0), v.row(0), static_cast<unsigned>(u.cols() / 2));
}

BinMatrix trace_product(const Gf4Matrix& u, const Gf4Matrix& v) {
    if (u.cols() != v.cols()) throw std::invalid_argument("trace_product: column mismatch");
    BinMatrix out(u.rows(), v.rows());
    for (size_t i = 0; i < u.rows(); ++i) {
        for (size_t j = 0; j < v.rows(); ++j) {
            bool acc = false;
            for (size_t c = 0; c < u.cols(); ++c) acc ^= gf4_trace(gf4_mul(u.at(i, c), gf4_conj(v.at(j, c))));
            out.set(i, j, acc);
        }
    }
    return out;
}

BinMatrix rref2(const BinMatrix& m) {
    std::vector<uint64_t> rows = m.row_masks();
    size_t pivot_row = 0;
    for (size_t col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        const uint64_t bit = uint64_t{1} << col;
        size_t found = rows.size();
        for (size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r] & bit) {
                found = r;
                break;
            }
        }
        if (found == rows.size()) continue;
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r != pivot_row && (rows[r] & bit)) rows[r] ^= rows[pivot_row];
        }
        ++pivot_row;
    }
    return BinMatrix(m.cols(), std::move(rows));
}

size_t rank_packed(std::vector<uint64_t> rows) {
    size_t rank = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i]) continue;
        ++rank;
        const uint64_t low = rows[i] & (~rows[i] + 1);
        for (size_t j = i + 1; j < rows.size(); ++j) {
            if (rows[j] & low) rows[j] ^= rows[i];
        }
    }
    return rank;
}

}  // namespace autopt
