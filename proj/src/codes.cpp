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

#include "autopt/codes.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace autopt {

ValidityReport validate(size_t n, size_t k, const Gf4Matrix& g, const Gf4Matrix& b) {
    ValidityReport report;
    auto fail = [&](std::string msg, int r = -1, int c = -1) {
        report.ok = false;
        report.message = std::move(msg);
        report.row = r;
        report.col = c;
        return report;
    };
    if (k > n) return fail("k exceeds n");
    if (g.rows() != n - k || (g.rows() && g.cols() != n)) {
        return fail("generator matrix must be " + std::to_string(n - k) + " x " + std::to_string(n));
    }
    if (b.rows() != 2 * k || (b.rows() && b.cols() != n)) {
        return fail("logical basis must be " + std::to_string(2 * k) + " x " + std::to_string(n));
    }
    std::vector<uint64_t> g_rows(g.rows());
    for (size_t r = 0; r < g.rows(); ++r) g_rows[r] = g.packed_row(r);
    if (rank_packed(g_rows) != g.rows()) return fail("generator rows are not GF(2)-independent");

    std::vector<uint64_t> stacked = g_rows;
    for (size_t r = 0; r < b.rows(); ++r) stacked.push_back(b.packed_row(r));
    const size_t m = n - k;
    for (size_t i = 0; i < stacked.size(); ++i) {
        for (size_t j = 0; j < stacked.size(); ++j) {
            bool expected = false;
            if (i >= m && j >= m) {
                const size_t bi = i - m;
                const size_t bj = j - m;
                expected = (bi + k == bj) || (bj + k == bi);
            }
            if (symp_packed(stacked[i], stacked[j], static_cast<unsigned>(n)) != expected) {
                std::ostringstream os;
                os << "Gram entry (" << i + 1 << ", " << j + 1 << ") of [G; B] should be " << expected;
                if (i < m && j < m) {
                    os << " (generators must commute)";
                } else if (i < m || j < m) {
                    os << " (logical operators must commute with generators)";
                } else {
                    os << " (basis must satisfy B (.) B^T = Omega)";
                }
                return fail(os.str(), static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return report;
}

StabCode::StabCode(size_t n, size_t k, Gf4Matrix g, Gf4Matrix b, std::string name)
    : n_(n), k_(k), g_(std::move(g)), b_(std::move(b)), name_(std::move(name)) {
    if (g_.rows() == 0) g_ = Gf4Matrix(0, n);
    if (b_.rows() == 0) b_ = Gf4Matrix(0, n);
    ValidityReport report = validate(n_, k_, g_, b_);
    if (!report.ok) throw InvalidCode(std::move(report));
}

Gf4Matrix dual_basis(const Gf4Matrix& b) {
    if (b.rows() % 2) throw std::invalid_argument("dual_basis: basis must have an even number of rows");
    const size_t k = b.rows() / 2;
    const Gf4Matrix x_half = b.row_slice(0, k);
    const Gf4Matrix z_half = b.row_slice(k, k);
    return Gf4Matrix::vstack(z_half, x_half);
}

CanonicalKey canonical_key_of_rows(std::vector<uint64_t> rows, size_t width) {
    const BinMatrix reduced = rref2(BinMatrix(width, std::move(rows)));
    CanonicalKey key;
    const size_t bytes_per_row = (width + 7) / 8;
    key.bytes.reserve(reduced.rows() * bytes_per_row);
    for (size_t r = 0; r < reduced.rows(); ++r) {
        const uint64_t row = reduced.row(r);
        for (size_t byte = 0; byte < bytes_per_row; ++byte) key.bytes.push_back(static_cast<char>((row >> (8 * byte)) & 0xff));
    }
    return key;
}

CanonicalKey canonical_key(const StabCode& code) {
    std::vector<uint64_t> rows(code.generators().rows());
    for (size_t r = 0; r < rows.size(); ++r) rows[r] = code.generators().packed_row(r);
    return canonical_key_of_rows(std::move(rows), 2 * code.n());
}

PackedSpan::PackedSpan(const std::vector<uint64_t>& rows) {
    for (uint64_t v : rows) {
        for (size_t i = 0; i < basis_.size(); ++i) {
            if (v & pivots_[i]) v ^= basis_[i];
        }
        if (!v) continue;
        const uint64_t pivot = v & (~v + 1);
        for (auto& b : basis_) {
            if (b & pivot) b ^= v;
        }
        basis_.push_back(v);
        pivots_.push_back(pivot);
    }
}

bool PackedSpan::contains(uint64_t v) const {
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (v & pivots_[i]) v ^= basis_[i];
    }
    return v == 0;
}

namespace {

struct Line {
    size_t number;
    std::string text;
};

bool is_blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::vector<Gf4> parse_row(const Line& line, size_t n) {
    std::vector<Gf4> out;
    size_t col = 0;
    while (col < line.text.size()) {
        const unsigned char c = static_cast<unsigned char>(line.text[col]);
        if (std::isspace(c)) {
            ++col;
            continue;
        }
        const size_t start = col;
        while (col < line.text.size() && !std::isspace(static_cast<unsigned char>(line.text[col]))) ++col;
        const std::string tok = line.text.substr(start, col - start);
        if (tok.size() != 1 || std::string("01wW").find(tok[0]) == std::string::npos) {
            throw ParseError(line.number, start + 1, "unknown token '" + tok + "' (expected 0, 1, w or W)");
        }
        if (out.size() == n) throw ParseError(line.number, start + 1, "row has more than " + std::to_string(n) + " entries");
        out.push_back(Gf4::from_token(tok[0]));
    }
    if (out.size() != n) {
        throw ParseError(line.number, line.text.size() + 1,
                         "row has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
    }
    return out;
}

}  // namespace

StabCode parse_code(std::string_view text, std::string name) {
    std::vector<Line> lines;
    {
        size_t number = 0;
        size_t pos = 0;
        while (pos <= text.size()) {
            const size_t end = text.find('\n', pos);
            std::string line(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            ++number;
            const size_t first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] != '#') lines.push_back({number, line});
            if (end == std::string_view::npos) break;
            pos = end + 1;
        }
    }

    size_t idx = 0;
    while (idx < lines.size() && is_blank(lines[idx].text)) ++idx;
    if (idx == lines.size()) throw ParseError(1, 1, "empty code file");

    size_t n = 0;
    size_t k = 0;
    {
        std::istringstream header(lines[idx].text);
        long long nn = -1;
        long long kk = -1;
        std::string extra;
        if (!(header >> nn >> kk) || (header >> extra) || nn <= 0 || kk < 0 || kk > nn) {
            throw ParseError(lines[idx].number, 1, "header must be \"n k\" with 0 <= k <= n and n > 0");
        }
        n = static_cast<size_t>(nn);
        k = static_cast<size_t>(kk);
        ++idx;
    }

    auto next_content = [&](const char* what) -> const Line& {
        if (idx >= lines.size() || is_blank(lines[idx].text)) {
            const size_t at = idx < lines.size() ? lines[idx].number : (lines.empty() ? 1 : lines.back().number + 1);
            throw ParseError(at, 1, std::string("expected ") + what);
        }
        return lines[idx++];
    };

    Gf4Matrix g(n - k, n);
    for (size_t r = 0; r < n - k; ++r) {
        const auto row = parse_row(next_content("a generator row"), n);
        for (size_t c = 0; c < n; ++c) g.at(r, c) = row[c];
    }
    if (idx < lines.size()) {
        if (!is_blank(lines[idx].text)) {
            throw ParseError(lines[idx].number, 1, "expected a blank line between generators and logical basis");
        }
        while (idx < lines.size() && is_blank(lines[idx].text)) ++idx;
    } else if (k > 0) {
        throw ParseError(lines.empty() ? 1 : lines.back().number + 1, 1, "missing logical basis");
    }
    Gf4Matrix b(2 * k, n);
    for (size_t r = 0; r < 2 * k; ++r) {
        const auto row = parse_row(next_content("a logical basis row"), n);
        for (size_t c = 0; c < n; ++c) b.at(r, c) = row[c];
    }
    while (idx < lines.size()) {
        if (!is_blank(lines[idx].text)) throw ParseError(lines[idx].number, 1, "unexpected content after logical basis");
        ++idx;
    }
    return StabCode(n, k, std::move(g), std::move(b), std::move(name));
}

std::string serialize_code(const StabCode& code) {
    std::ostringstream os;
    os << code.n() << ' ' << code.k() << '\n';
    for (const auto& row : code.generators().to_strings()) os << row << '\n';
    os << '\n';
    for (const auto& row : code.basis().to_strings()) os << row << '\n';
    return os.str();
}

StabCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open code file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_code(buffer.str(), path);
}

namespace {

// Reference generator-basis matrices. Where a code
// appears with several matrices, each distinct one is its own entry, named
// after the first (metric, class) row that prints it.
const std::map<std::string, std::string>& fixture_texts() {
    static const std::map<std::string, std::string> kFixtures = {
        {"4_1_2",
         "4 1\n"
         "1 W W 0\n0 1 1 W\nw 0 w w\n\n"
         "w 1 0 0\n0 w w 0\n"},
        {"4_1_2.m1c3",
         "4 1\n"
         "1 W w 0\n0 1 W 1\nw 0 1 W\n\n"
         "w 1 0 0\n0 w 1 0\n"},
        {"4_1_2.m2c3",
         "4 1\n"
         "1 W w 0\n0 1 W w\nw 0 1 W\n\n"
         "w 1 0 0\n0 w 1 0\n"},
        {"4_2_2",
         "4 2\n"
         "1 1 1 1\nw w w w\n\n"
         "1 1 0 0\nw w 0 0\nw 0 w 0\n1 0 1 0\n"},
        {"4_2_2.m1c5",
         "4 2\n"
         "W w 1 1\n1 W w w\n\n"
         "W w 0 0\n1 W 0 0\n1 0 w 0\nW 0 1 0\n"},
        {"4_2_2.m1c6",
         "4 2\n"
         "1 1 1 1\nW w w w\n\n"
         "1 1 0 0\nW w 0 0\nW 0 w 0\n1 0 1 0\n"},
        {"4_2_2.m1c9",
         "4 2\n"
         "w 1 1 1\nW w w w\n\n"
         "w 1 0 0\nW w 0 0\nW 0 w 0\nw 0 1 0\n"},
        {"4_2_2.m2c6",
         "4 2\n"
         "1 1 1 1\nW W w w\n\n"
         "1 1 0 0\nW W 0 0\nW 0 w 0\n1 0 1 0\n"},
        {"5_1_2",
         "5 1\n"
         "w w 0 w 0\n0 0 w w 1\n0 1 1 1 0\n1 0 0 1 w\n\n"
         "0 w 0 w 1\n0 0 1 0 w\n"},
        {"5_1_2.m2c3",
         "5 1\n"
         "w 1 0 w 0\n0 0 w w 1\n0 w 1 1 0\n1 0 0 1 w\n\n"
         "0 1 0 w 1\n0 0 1 0 w\n"},
        {"5_1_3",
         "5 1\n"
         "W 1 w 1 0\n1 0 w W 1\n0 1 1 W w\n1 W 0 1 w\n\n"
         "w 1 1 0 0\n1 W w 0 0\n"},
        {"5_1_3.m2c2",
         "5 1\n"
         "W w w 1 0\nw 0 w w 1\n0 w 1 w W\nw W 0 1 W\n\n"
         "1 w 1 0 0\nw W w 0 0\n"},
        {"5_2_1",
         "5 2\n"
         "0 0 w w w\n0 1 1 1 0\n1 0 0 1 1\n\n"
         "0 w 0 w w\nw w 0 w 0\n0 0 1 0 1\n0 0 0 1 1\n"},
        {"5_2_2",
         "5 2\n"
         "0 w 0 0 w\nw 0 w w w\n1 1 1 1 1\n\n"
         "0 1 0 1 1\n0 1 1 0 1\n0 0 w 0 w\n0 0 0 w w\n"},
        {"5_2_2.m1c6",
         "5 2\n"
         "0 w 0 0 w\nw 0 w w w\n1 1 1 W 1\n\n"
         "0 1 0 W 1\n0 1 1 0 1\n0 0 w 0 w\n0 0 0 w w\n"},
        {"6_1_3",
         "6 1\n"
         "1 0 0 0 0 w\n0 1 1 w W 0\n0 W 0 W W w\n0 1 w 0 w w\nw W w w 0 W\n\n"
         "0 0 w w w 0\n0 0 0 1 w w\n"},
        {"6_1_3.m1c3",
         "6 1\n"
         "1 0 0 0 0 w\n0 1 1 w W 0\n0 W 0 W W w\n0 1 w 0 1 w\nw W w w 0 W\n\n"
         "0 0 w w 1 0\n0 0 0 1 1 w\n"},
        {"6_1_3.m2c3",
         "6 1\n"
         "1 0 0 0 0 w\n0 1 1 w w 0\n0 W 0 1 w w\n0 1 w 0 W w\nw W w w 0 W\n\n"
         "0 0 w w W 0\n0 0 0 W W w\n"},
        {"7_1_3",
         "7 1\n"
         "1 0 w 0 w W 0\n1 w w w 0 0 0\n1 0 0 w w 0 W\nw 0 W 0 W w 0\nw 1 W 1 0 0 0\nw 0 0 1 W 0 1\n\n"
         "0 w 0 w 0 0 W\n0 1 0 1 0 0 1\n"},
        {"7_1_3.m2c2",
         "7 1\n"
         "1 0 w 0 w W 0\n1 W w 0 0 0 W\n1 W 0 w w 0 0\nw 0 W 0 1 w 0\nw 1 W 0 0 0 1\nw 1 0 W 1 0 0\n\n"
         "0 W 0 w 0 0 W\n0 1 0 W 0 0 1\n"},
        {"7_1_3.m2c3",
         "7 1\n"
         "1 0 w 0 w W 0\n1 w w w 0 0 0\n1 0 0 w w 0 W\nw 0 W 0 W w 0\nw 1 W W 0 0 0\nw 0 0 W W 0 w\n\n"
         "0 w 0 w 0 0 W\n0 1 0 W 0 0 w\n"},
    };
    return kFixtures;
}

}  // namespace

StabCode builtin(const std::string& name) {
    const auto& fixtures = fixture_texts();
    const auto it = fixtures.find(name);
    if (it == fixtures.end()) throw std::invalid_argument("unknown builtin code '" + name + "'");
    return parse_code(it->second, name);
}

std::vector<std::string> builtin_names() {
    std::vector<std::string> out;
    for (const auto& [name, text] : fixture_texts()) out.push_back(name);
    return out;
}

StabCode resolve_code(const std::string& name_or_path) {
    const auto& fixtures = fixture_texts();
    if (fixtures.count(name_or_path)) return builtin(name_or_path);
    return load_code_file(name_or_path);
}

}  // namespace autopt
