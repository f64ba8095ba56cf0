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

#ifndef AUTOPT_CODES_HPP
#define AUTOPT_CODES_HPP

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "autopt/gf4.hpp"

namespace autopt {

struct ValidityReport {
    bool ok = true;
    std::string message;
    /// First offending Gram entry in the stacked [G; B] matrix, or -1.
    int row = -1;
    int col = -1;
};

/// Checks that G has GF(2)-independent rows and that [G; B] has the block
/// Gram matrix diag(0, Omega_2k) under the trace product.
ValidityReport validate(size_t n, size_t k, const Gf4Matrix& g, const Gf4Matrix& b);

class InvalidCode : public std::runtime_error {
public:
    explicit InvalidCode(ValidityReport report)
        : std::runtime_error(report.message), report_(std::move(report)) {}
    const ValidityReport& report() const { return report_; }

private:
    ValidityReport report_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(size_t line, size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}
    size_t line() const { return line_; }
    size_t column() const { return column_; }

private:
    size_t line_;
    size_t column_;
};

/// A stabiliser code as an additive GF(4) code: generators G ((n-k) x n) and
/// a symplectic logical basis B (2k x n, rows X_1..X_k, Z_1..Z_k).
///
/// Instances are always valid; the constructor throws InvalidCode otherwise.
class StabCode {
public:
    StabCode(size_t n, size_t k, Gf4Matrix g, Gf4Matrix b, std::string name = {});

    size_t n() const { return n_; }
    size_t k() const { return k_; }
    const Gf4Matrix& generators() const { return g_; }
    const Gf4Matrix& basis() const { return b_; }
    const std::string& name() const { return name_; }

    /// [G; B] stacked, the generator-basis matrix.
    Gf4Matrix generator_basis() const { return Gf4Matrix::vstack(g_, b_); }

    bool operator==(const StabCode& other) const { return n_ == other.n_ && k_ == other.k_ && g_ == other.g_ && b_ == other.b_; }

private:
    size_t n_;
    size_t k_;
    Gf4Matrix g_;
    Gf4Matrix b_;
    std::string name_;
};

/// Omega_2k B: swaps the X and Z halves of the basis.
Gf4Matrix dual_basis(const Gf4Matrix& b);

/// RREF of phi(G) flattened to bytes; equal iff the stabiliser spans agree.
struct CanonicalKey {
    std::string bytes;
    auto operator<=>(const CanonicalKey&) const = default;
};

struct CanonicalKeyHash {
    size_t operator()(const CanonicalKey& key) const { return std::hash<std::string>{}(key.bytes); }
};

CanonicalKey canonical_key(const StabCode& code);
CanonicalKey canonical_key_of_rows(std::vector<uint64_t> rows, size_t width);

/// RREF basis of a GF(2) span of packed rows with membership tests.
class PackedSpan {
public:
    PackedSpan() = default;
    explicit PackedSpan(const std::vector<uint64_t>& rows);

    bool contains(uint64_t v) const;
    size_t dimension() const { return basis_.size(); }

private:
    std::vector<uint64_t> basis_;
    std::vector<uint64_t> pivots_;
};

StabCode parse_code(std::string_view text, std::string name = {});
std::string serialize_code(const StabCode& code);
StabCode load_code_file(const std::string& path);

/// Generator-basis matrices of the small codes in the results tables.
StabCode builtin(const std::string& name);
std::vector<std::string> builtin_names();

/// Builtin name if it exists, otherwise a file path.
StabCode resolve_code(const std::string& name_or_path);

}  // namespace autopt

#endif  // AUTOPT_CODES_HPP
