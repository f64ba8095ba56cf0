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

#include "autopt/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace autopt {

namespace {

// Rows follow the enum order I, H, S, HS, SH, HSH.
constexpr std::array<Local2x2, 6> kMatrices = {{
    {1, 0, 0, 1},  // I
    {0, 1, 1, 0},  // H: swaps 1 and w
    {1, 0, 1, 1},  // S
    {1, 1, 1, 0},  // HS: multiply by w^2
    {0, 1, 1, 1},  // SH: multiply by w
    {1, 1, 0, 1},  // HSH: w <-> w^2
}};

constexpr std::array<const char*, 6> kNames = {"I", "H", "S", "HS", "SH", "HSH"};

struct Tables {
    // act[c][code] -> code
    std::array<std::array<uint8_t, 4>, 6> act{};
    std::array<std::array<LocalClifford, 6>, 6> mul{};
    std::array<LocalClifford, 6> inv{};
};

const Tables& tables() {
    static const Tables t = [] {
        Tables out;
        for (size_t c = 0; c < 6; ++c) {
            const Local2x2& m = kMatrices[c];
            for (uint8_t v = 0; v < 4; ++v) {
                const bool x = v & 1;
                const bool z = (v >> 1) & 1;
                const bool nx = (m.a && x) ^ (m.b && z);
                const bool nz = (m.c && x) ^ (m.d && z);
                out.act[c][v] = static_cast<uint8_t>(nx | (nz << 1));
            }
        }
        for (size_t p = 0; p < 6; ++p) {
            for (size_t q = 0; q < 6; ++q) {
                std::array<uint8_t, 4> composed{};
                for (uint8_t v = 0; v < 4; ++v) composed[v] = out.act[p][out.act[q][v]];
                for (size_t r = 0; r < 6; ++r) {
                    if (out.act[r] == composed) out.mul[p][q] = static_cast<LocalClifford>(r);
                }
            }
        }
        for (size_t p = 0; p < 6; ++p) {
            for (size_t q = 0; q < 6; ++q) {
                if (out.mul[p][q] == LocalClifford::I) out.inv[p] = static_cast<LocalClifford>(q);
            }
        }
        return out;
    }();
    return t;
}

size_t idx(LocalClifford c) { return static_cast<size_t>(c); }

}  // namespace

const char* local_name(LocalClifford c) { return kNames[idx(c)]; }

LocalClifford local_from_name(std::string_view name) {
    for (size_t c = 0; c < 6; ++c) {
        if (name == kNames[c]) return static_cast<LocalClifford>(c);
    }
    throw std::invalid_argument("unknown local Clifford '" + std::string(name) + "'");
}

Local2x2 local_matrix(LocalClifford c) { return kMatrices[idx(c)]; }

Gf4 local_apply(LocalClifford c, Gf4 v) { return Gf4::from_code(tables().act[idx(c)][v.code()]); }

LocalClifford local_mul(LocalClifford p, LocalClifford q) { return tables().mul[idx(p)][idx(q)]; }

LocalClifford local_inv(LocalClifford c) { return tables().inv[idx(c)]; }

SympMatrix::SympMatrix(BinMatrix m) : m_(std::move(m)) {
    if (!is_symplectic(m_)) throw std::invalid_argument("matrix is not symplectic:\n" + m_.str());
}

bool SympMatrix::is_symplectic(const BinMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2) return false;
    const BinMatrix omega = BinMatrix::omega(m.rows() / 2);
    return m * omega * m.transpose() == omega;
}

SympMatrix SympMatrix::inverse() const {
    const BinMatrix omega = BinMatrix::omega(half());
    return SympMatrix(omega * m_.transpose() * omega);
}

MonomialOp MonomialOp::identity(size_t n) {
    if (n > kMaxQubits) throw std::invalid_argument("at most 16 qubits are supported");
    MonomialOp op;
    op.n_ = static_cast<uint8_t>(n);
    for (size_t j = 0; j < n; ++j) op.perm_[j] = static_cast<uint8_t>(j);
    return op;
}

MonomialOp MonomialOp::from_one_based(const std::vector<int>& perm, const std::vector<LocalClifford>& locals) {
    if (perm.size() != locals.size()) throw std::invalid_argument("perm and locals differ in length");
    MonomialOp op = identity(perm.size());
    for (size_t j = 0; j < perm.size(); ++j) {
        if (perm[j] < 1 || static_cast<size_t>(perm[j]) > perm.size()) {
            throw std::invalid_argument("perm entry out of range");
        }
        op.perm_[j] = static_cast<uint8_t>(perm[j] - 1);
        op.locals_[j] = locals[j];
    }
    op.check();
    return op;
}

bool MonomialOp::is_identity() const {
    for (size_t j = 0; j < n_; ++j) {
        if (perm_[j] != j || locals_[j] != LocalClifford::I) return false;
    }
    return true;
}

void MonomialOp::check() const {
    uint32_t seen = 0;
    for (size_t j = 0; j < n_; ++j) {
        if (perm_[j] >= n_ || (seen >> perm_[j]) & 1u) throw std::invalid_argument("perm is not a permutation");
        seen |= 1u << perm_[j];
    }
}

std::vector<int> MonomialOp::perm_one_based() const {
    std::vector<int> out(n_);
    for (size_t j = 0; j < n_; ++j) out[j] = perm_[j] + 1;
    return out;
}

std::vector<std::string> MonomialOp::local_names() const {
    std::vector<std::string> out(n_);
    for (size_t j = 0; j < n_; ++j) out[j] = local_name(locals_[j]);
    return out;
}

std::string MonomialOp::str() const {
    std::ostringstream os;
    os << "perm=[";
    for (size_t j = 0; j < n_; ++j) os << (j ? "," : "") << perm_[j] + 1;
    os << "] locals=[";
    for (size_t j = 0; j < n_; ++j) os << (j ? "," : "") << local_name(locals_[j]);
    os << "]";
    return os.str();
}

namespace {

std::vector<std::string> bracket_items(std::string_view text, std::string_view key) {
    const size_t at = text.find(key);
    if (at == std::string_view::npos) throw std::invalid_argument("missing '" + std::string(key) + "' in circuit text");
    const size_t open = at + key.size();
    if (open >= text.size() || text[open] != '[') throw std::invalid_argument("expected '[' after " + std::string(key));
    const size_t close = text.find(']', open);
    if (close == std::string_view::npos) throw std::invalid_argument("unterminated '['");
    std::vector<std::string> items;
    std::string cur;
    for (size_t i = open + 1; i < close; ++i) {
        const char c = text[i];
        if (c == ',') {
            items.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !items.empty()) items.push_back(cur);
    return items;
}

}  // namespace

MonomialOp MonomialOp::parse(std::string_view text) {
    const auto perm_items = bracket_items(text, "perm=");
    const auto local_items = bracket_items(text, "locals=");
    std::vector<int> perm;
    for (const auto& item : perm_items) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad perm entry '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("bad perm entry '" + item + "'");
        perm.push_back(v);
    }
    std::vector<LocalClifford> locals;
    for (const auto& item : local_items) locals.push_back(local_from_name(item));
    return from_one_based(perm, locals);
}

std::strong_ordering operator<=>(const MonomialOp& a, const MonomialOp& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    for (size_t j = 0; j < a.n_; ++j) {
        if (auto c = a.perm_[j] <=> b.perm_[j]; c != 0) return c;
    }
    for (size_t j = 0; j < a.n_; ++j) {
        if (auto c = a.locals_[j] <=> b.locals_[j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

size_t MonomialOpHash::operator()(const MonomialOp& op) const {
    uint64_t h = op.n();
    for (size_t j = 0; j < op.n(); ++j) h = h * 131 + op.perm(j) * 7 + static_cast<uint64_t>(op.local(j));
    return static_cast<size_t>(h * 0x9E3779B97F4A7C15ull);
}

MonomialOp from_s3n(const std::vector<int>& p) {
    if (p.empty() || p.size() % 3) throw std::invalid_argument("S_3n permutation length must be a positive multiple of 3");
    const size_t n = p.size() / 3;
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 1 || static_cast<size_t>(v) > p.size() || seen[v - 1]) {
            throw std::invalid_argument("not a permutation of 1..3n");
        }
        seen[v - 1] = true;
    }
    MonomialOp op = MonomialOp::identity(n);
    for (size_t j = 0; j < n; ++j) {
        const size_t dest = static_cast<size_t>(p[3 * j] - 1) / 3;
        std::array<uint8_t, 4> image{0, 0, 0, 0};
        for (size_t i = 0; i < 3; ++i) {
            const size_t v = static_cast<size_t>(p[3 * j + i] - 1);
            if (v / 3 != dest) throw std::invalid_argument("block " + std::to_string(j + 1) + " spans several destination blocks");
            // In-block positions 0, 1, 2 stand for 1, w, w^2 (codes 1, 2, 3).
            image[i + 1] = static_cast<uint8_t>(v % 3 + 1);
        }
        bool found = false;
        for (LocalClifford c : kAllLocals) {
            bool match = true;
            for (uint8_t v = 1; v < 4; ++v) match = match && local_apply(c, Gf4::from_code(v)).code() == image[v];
            if (match) {
                op.set_local(j, c);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("block pattern matches no local Clifford");
        op.set_perm(j, dest);
    }
    op.check();
    return op;
}

std::vector<int> to_s3n(const MonomialOp& op) {
    std::vector<int> out(3 * op.n());
    for (size_t j = 0; j < op.n(); ++j) {
        for (uint8_t v = 1; v < 4; ++v) {
            const uint8_t img = local_apply(op.local(j), Gf4::from_code(v)).code();
            out[3 * j + v - 1] = static_cast<int>(3 * op.perm(j) + img);
        }
    }
    return out;
}

std::vector<int> perm_from_cycles(std::string_view cycles, size_t m) {
    std::vector<int> out(m);
    for (size_t i = 0; i < m; ++i) out[i] = static_cast<int>(i + 1);
    std::vector<bool> used(m + 1, false);
    size_t pos = 0;
    while (pos < cycles.size()) {
        if (std::isspace(static_cast<unsigned char>(cycles[pos]))) {
            ++pos;
            continue;
        }
        if (cycles[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        const size_t close = cycles.find(')', pos);
        if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
        std::vector<int> cyc;
        std::string cur;
        for (size_t i = pos + 1; i <= close; ++i) {
            const char c = cycles[i];
            if (c == ',' || c == ')') {
                if (cur.empty()) throw std::invalid_argument("empty cycle entry");
                const int v = std::stoi(cur);
                if (v < 1 || static_cast<size_t>(v) > m || used[v]) throw std::invalid_argument("bad cycle entry");
                used[v] = true;
                cyc.push_back(v);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        for (size_t i = 0; i < cyc.size(); ++i) out[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
        pos = close + 1;
    }
    return out;
}

MonomialOp compose(const MonomialOp& a, const MonomialOp& b) {
    if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
    MonomialOp out = MonomialOp::identity(a.n());
    for (size_t j = 0; j < a.n(); ++j) {
        const size_t mid = b.perm(j);
        out.set_perm(j, a.perm(mid));
        out.set_local(j, local_mul(a.local(mid), b.local(j)));
    }
    return out;
}

MonomialOp inverse(const MonomialOp& a) {
    MonomialOp out = MonomialOp::identity(a.n());
    for (size_t j = 0; j < a.n(); ++j) {
        out.set_perm(a.perm(j), j);
        out.set_local(a.perm(j), local_inv(a.local(j)));
    }
    return out;
}

Gf4Matrix apply(const MonomialOp& op, const Gf4Matrix& m) {
    if (m.cols() != op.n()) throw std::invalid_argument("apply: column count differs from qubit count");
    Gf4Matrix out(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t j = 0; j < op.n(); ++j) out.at(r, op.perm(j)) = local_apply(op.local(j), m.at(r, j));
    }
    return out;
}

uint64_t apply_packed(const MonomialOp& op, uint64_t row) {
    const auto& act = tables().act;
    const size_t n = op.n();
    uint64_t out = 0;
    for (size_t j = 0; j < n; ++j) {
        const uint8_t v = static_cast<uint8_t>(((row >> j) & 1u) | (((row >> (n + j)) & 1u) << 1));
        const uint8_t w = act[idx(op.local(j))][v];
        const size_t d = op.perm(j);
        out |= static_cast<uint64_t>(w & 1u) << d;
        out |= static_cast<uint64_t>(w >> 1) << (n + d);
    }
    return out;
}

SympMatrix lift_symplectic(const MonomialOp& op) {
    const size_t n = op.n();
    BinMatrix f(2 * n, 2 * n);
    for (size_t j = 0; j < n; ++j) {
        const size_t d = op.perm(j);
        const Local2x2 m = local_matrix(op.local(j));
        f.set(d, j, m.a);
        f.set(d, n + j, m.b);
        f.set(n + d, j, m.c);
        f.set(n + d, n + j, m.d);
    }
    return SympMatrix(std::move(f));
}

size_t cycle_count(const MonomialOp& op) {
    uint32_t seen = 0;
    size_t cycles = 0;
    for (size_t j = 0; j < op.n(); ++j) {
        if ((seen >> j) & 1u) continue;
        ++cycles;
        for (size_t i = j; !((seen >> i) & 1u); i = op.perm(i)) seen |= 1u << i;
    }
    return cycles;
}

size_t swap_count(const MonomialOp& op) { return op.n() - cycle_count(op); }

size_t clifford_count(const MonomialOp& op) {
    size_t c = 0;
    for (size_t j = 0; j < op.n(); ++j) c += op.local(j) != LocalClifford::I;
    return c;
}

uint64_t hamming_order(size_t n) {
    uint64_t out = 1;
    for (size_t i = 1; i <= n; ++i) out *= 6 * i;
    return out;
}

namespace {

uint64_t pow6(size_t n) {
    uint64_t out = 1;
    for (size_t i = 0; i < n; ++i) out *= 6;
    return out;
}

}  // namespace

MonomialOp hamming_element(size_t n, uint64_t index) {
    if (index >= hamming_order(n)) throw std::out_of_range("hamming_element: index out of range");
    const uint64_t locals_count = pow6(n);
    uint64_t local_part = index % locals_count;
    uint64_t rank = index / locals_count;
    MonomialOp op = MonomialOp::identity(n);
    for (size_t j = 0; j < n; ++j) {
        op.set_local(j, static_cast<LocalClifford>(local_part % 6));
        local_part /= 6;
    }
    // Unrank the permutation through its Lehmer code.
    std::vector<uint64_t> fact(n + 1, 1);
    for (size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    std::vector<uint8_t> pool(n);
    for (size_t i = 0; i < n; ++i) pool[i] = static_cast<uint8_t>(i);
    for (size_t j = 0; j < n; ++j) {
        const uint64_t f = fact[n - 1 - j];
        const size_t pick = static_cast<size_t>(rank / f);
        rank %= f;
        op.set_perm(j, pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return op;
}

uint64_t hamming_index(const MonomialOp& op) {
    const size_t n = op.n();
    uint64_t rank = 0;
    for (size_t j = 0; j < n; ++j) {
        uint64_t smaller = 0;
        for (size_t i = j + 1; i < n; ++i) smaller += op.perm(i) < op.perm(j);
        rank = rank * (n - j) + smaller;
    }
    uint64_t local_part = 0;
    for (size_t j = n; j-- > 0;) local_part = local_part * 6 + static_cast<uint64_t>(op.local(j));
    return rank * pow6(n) + local_part;
}

}  // namespace autopt
