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

#include "autopt/symplectic.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace autopt {

namespace packed {

namespace {

uint64_t row_mask(size_t k) { return (uint64_t{1} << (2 * k)) - 1; }

}  // namespace

uint64_t pack(const BinMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 || m.rows() > 6) {
        throw std::invalid_argument("expected a 2k x 2k matrix with k <= 3");
    }
    const size_t w = m.rows();
    uint64_t out = 0;
    for (size_t r = 0; r < w; ++r) out |= m.row(r) << (w * r);
    return out;
}

BinMatrix unpack(uint64_t p, size_t k) {
    const size_t w = 2 * k;
    std::vector<uint64_t> rows(w);
    for (size_t r = 0; r < w; ++r) rows[r] = (p >> (w * r)) & row_mask(k);
    return BinMatrix(w, std::move(rows));
}

uint64_t mul(uint64_t a, uint64_t b, size_t k) {
    const size_t w = 2 * k;
    const uint64_t rm = row_mask(k);
    uint64_t out = 0;
    for (size_t r = 0; r < w; ++r) {
        uint64_t acc = 0;
        uint64_t bits = (a >> (w * r)) & rm;
        while (bits) {
            const int c = __builtin_ctzll(bits);
            acc ^= (b >> (w * static_cast<size_t>(c))) & rm;
            bits &= bits - 1;
        }
        out |= acc << (w * r);
    }
    return out;
}

uint64_t transpose(uint64_t a, size_t k) {
    const size_t w = 2 * k;
    uint64_t out = 0;
    for (size_t r = 0; r < w; ++r) {
        for (size_t c = 0; c < w; ++c) {
            if ((a >> (w * r + c)) & 1u) out |= uint64_t{1} << (w * c + r);
        }
    }
    return out;
}

uint64_t identity(size_t k) {
    const size_t w = 2 * k;
    uint64_t out = 0;
    for (size_t r = 0; r < w; ++r) out |= uint64_t{1} << (w * r + r);
    return out;
}

namespace {

uint64_t omega(size_t k) {
    const size_t w = 2 * k;
    uint64_t out = 0;
    for (size_t i = 0; i < k; ++i) {
        out |= uint64_t{1} << (w * i + k + i);
        out |= uint64_t{1} << (w * (k + i) + i);
    }
    return out;
}

}  // namespace

uint64_t symp_inverse(uint64_t a, size_t k) {
    const uint64_t om = omega(k);
    return mul(mul(om, transpose(a, k), k), om, k);
}

bool is_symplectic(uint64_t a, size_t k) {
    const uint64_t om = omega(k);
    return mul(mul(a, om, k), transpose(a, k), k) == om;
}

}  // namespace packed

uint64_t sp_order_formula(size_t k) {
    uint64_t out = uint64_t{1} << (k * k);
    uint64_t four = 1;
    for (size_t i = 1; i <= k; ++i) {
        four *= 4;
        out *= four - 1;
    }
    return out;
}

namespace {

void check_k(size_t k) {
    if (k < 1 || k > 3) throw std::invalid_argument("Sp(2k,2) is supported for 1 <= k <= 3");
}

// T_v: x -> x + <x, v> v, as a matrix acting on row vectors from the right
// (x T_v); any consistent side generates the same group.
uint64_t transvection(uint64_t v, size_t k) {
    const size_t w = 2 * k;
    uint64_t out = 0;
    for (size_t r = 0; r < w; ++r) {
        const uint64_t e = uint64_t{1} << r;
        uint64_t img = e;
        if (symp_packed(e, v, static_cast<unsigned>(k))) img ^= v;
        out |= img << (w * r);
    }
    return out;
}

// Transvections along vectors of weight one or two already generate the
// group; the order check in enumerate_sp guards this.
std::vector<uint64_t> generators(size_t k) {
    std::vector<uint64_t> out;
    for (uint64_t v = 1; v < (uint64_t{1} << (2 * k)); ++v) {
        if (__builtin_popcountll(v) <= 2) out.push_back(transvection(v, k));
    }
    return out;
}

// Open-addressing map from packed matrix to a 32-bit slot value. Keys are
// never zero because the zero matrix is not symplectic.
class FlatIndex {
public:
    explicit FlatIndex(size_t expected) {
        size_t cap = 16;
        while (cap < 2 * expected) cap <<= 1;
        keys_.assign(cap, 0);
        values_.assign(cap, 0);
        mask_ = cap - 1;
    }

    // Returns the stored value, inserting `value` if the key is new.
    std::pair<uint32_t, bool> insert(uint64_t key, uint32_t value) {
        size_t h = slot(key);
        while (keys_[h] != 0) {
            if (keys_[h] == key) return {values_[h], false};
            h = (h + 1) & mask_;
        }
        keys_[h] = key;
        values_[h] = value;
        return {value, true};
    }

    std::optional<uint32_t> find(uint64_t key) const {
        size_t h = slot(key);
        while (keys_[h] != 0) {
            if (keys_[h] == key) return values_[h];
            h = (h + 1) & mask_;
        }
        return std::nullopt;
    }

private:
    size_t slot(uint64_t key) const { return static_cast<size_t>((key * 0x9E3779B97F4A7C15ull) >> 20) & mask_; }

    std::vector<uint64_t> keys_;
    std::vector<uint32_t> values_;
    size_t mask_ = 0;
};

// Right multiplication by a fixed matrix, one lookup per row.
struct RightMul {
    RightMul(uint64_t g, size_t k) : k(k) {
        const size_t w = 2 * k;
        table.resize(size_t{1} << w);
        for (uint64_t row = 0; row < table.size(); ++row) table[row] = packed::mul(row, g, k) & ((uint64_t{1} << w) - 1);
    }

    uint64_t operator()(uint64_t x) const {
        const size_t w = 2 * k;
        const uint64_t rm = (uint64_t{1} << w) - 1;
        uint64_t out = 0;
        for (size_t r = 0; r < w; ++r) out |= table[(x >> (w * r)) & rm] << (w * r);
        return out;
    }

    size_t k;
    std::vector<uint64_t> table;
};

}  // namespace

std::vector<uint64_t> enumerate_sp(size_t k) {
    check_k(k);
    std::vector<RightMul> gens;
    for (uint64_t g : generators(k)) gens.emplace_back(g, k);
    FlatIndex seen(sp_order_formula(k));
    std::vector<uint64_t> all{packed::identity(k)};
    seen.insert(all[0], 0);
    for (size_t head = 0; head < all.size(); ++head) {
        const uint64_t x = all[head];
        for (const auto& g : gens) {
            const uint64_t y = g(x);
            if (seen.insert(y, 0).second) all.push_back(y);
        }
    }
    std::sort(all.begin(), all.end());
    if (all.size() != sp_order_formula(k)) throw std::logic_error("symplectic closure has the wrong order");
    return all;
}

std::vector<std::vector<std::string>> table_representatives(size_t k) {
    if (k == 1) {
        return {{"10", "01"}, {"01", "11"}, {"01", "10"}};
    }
    if (k == 2) {
        return {
            {"1000", "0100", "0010", "0001"},
            {"0001", "0010", "0100", "1000"},
            {"0001", "0010", "0100", "1001"},
            {"0001", "0011", "0110", "1000"},
            {"0010", "0011", "1111", "0110"},
            {"0001", "0011", "1100", "1000"},
            {"0001", "0010", "0100", "1010"},
            {"0001", "0011", "1101", "1000"},
            {"0001", "0010", "0101", "1010"},
            {"0001", "0011", "1100", "1011"},
            {"0001", "0011", "1101", "1011"},
        };
    }
    return {};
}

std::vector<size_t> table_class_sizes(size_t k) {
    if (k == 1) return {1, 2, 3};
    if (k == 2) return {1, 15, 15, 40, 40, 45, 90, 90, 120, 120, 144};
    return {};
}

SpGroup::SpGroup(size_t k) : k_(k), elements_(enumerate_sp(k)) {
    const size_t order = elements_.size();
    std::vector<uint32_t> raw(order, UINT32_MAX);
    std::vector<std::vector<uint32_t>> members;
    const std::vector<uint64_t> gens = generators(k);
    std::vector<RightMul> right;
    for (uint64_t g : gens) right.emplace_back(g, k);
    FlatIndex index(order);
    for (size_t e = 0; e < order; ++e) index.insert(elements_[e], static_cast<uint32_t>(e));
    // Transvections are involutions, so g x g^-1 = g x g.
    for (size_t start = 0; start < order; ++start) {
        if (raw[start] != UINT32_MAX) continue;
        const uint32_t id = static_cast<uint32_t>(members.size());
        members.emplace_back();
        std::vector<uint32_t> stack{static_cast<uint32_t>(start)};
        raw[start] = id;
        while (!stack.empty()) {
            const uint32_t cur = stack.back();
            stack.pop_back();
            members[id].push_back(cur);
            for (size_t gi = 0; gi < right.size(); ++gi) {
                const uint64_t conj = packed::mul(gens[gi], right[gi](elements_[cur]), k);
                const uint32_t pos = *index.find(conj);
                if (raw[pos] == UINT32_MAX) {
                    raw[pos] = id;
                    stack.push_back(pos);
                }
            }
        }
    }

    const size_t count = members.size();
    std::vector<size_t> label_of_raw(count, 0);
    reps_.assign(count, 0);
    const auto table = table_representatives(k);
    if (!table.empty()) {
        if (table.size() != count) throw std::logic_error("representative table size differs from class count");
        const auto sizes = table_class_sizes(k);
        std::vector<bool> placed(table.size(), false);
        for (size_t t = 0; t < table.size(); ++t) {
            const uint64_t rep = packed::pack(BinMatrix::from_strings(table[t]));
            // Two table matrices fail the symplectic test; they are placed
            // by elimination below.
            if (!packed::is_symplectic(rep, k)) continue;
            const uint32_t id = raw[position(rep)];
            if (label_of_raw[id] != 0) throw std::logic_error("two table representatives share a conjugacy class");
            if (members[id].size() != sizes[t]) throw std::logic_error("table representative lands in a class of the wrong size");
            label_of_raw[id] = t + 1;
            reps_[t] = rep;
            placed[t] = true;
        }
        for (size_t t = 0; t < table.size(); ++t) {
            if (placed[t]) continue;
            size_t hits = 0;
            uint32_t hit = 0;
            for (uint32_t id = 0; id < count; ++id) {
                if (label_of_raw[id] == 0 && members[id].size() == sizes[t]) {
                    ++hits;
                    hit = id;
                }
            }
            if (hits != 1) throw std::logic_error("cannot place a table class by size");
            label_of_raw[hit] = t + 1;
            uint64_t least = UINT64_MAX;
            for (uint32_t e : members[hit]) least = std::min(least, elements_[e]);
            reps_[t] = least;
        }
    } else {
        struct Fingerprint {
            size_t size;
            unsigned trace;
            size_t rank;
            uint64_t least;
            uint32_t id;
        };
        std::vector<Fingerprint> prints;
        for (uint32_t id = 0; id < count; ++id) {
            uint64_t least = UINT64_MAX;
            for (uint32_t e : members[id]) least = std::min(least, elements_[e]);
            const BinMatrix m = packed::unpack(least, k);
            unsigned trace = 0;
            for (size_t i = 0; i < 2 * k; ++i) trace ^= m.get(i, i);
            const size_t rank = (m + BinMatrix::identity(2 * k)).rank();
            prints.push_back({members[id].size(), trace, rank, least, id});
        }
        std::sort(prints.begin(), prints.end(), [](const Fingerprint& a, const Fingerprint& b) {
            return std::tie(a.size, a.trace, a.rank, a.least) < std::tie(b.size, b.trace, b.rank, b.least);
        });
        for (size_t i = 0; i < prints.size(); ++i) {
            label_of_raw[prints[i].id] = i + 1;
            reps_[i] = prints[i].least;
        }
    }

    label_.resize(order);
    class_sizes_.assign(count, 0);
    for (size_t e = 0; e < order; ++e) {
        const size_t label = label_of_raw[raw[e]];
        label_[e] = static_cast<uint16_t>(label);
        ++class_sizes_[label - 1];
    }
}

size_t SpGroup::position(uint64_t p) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) throw std::invalid_argument("matrix is not in Sp(2k,2)");
    return static_cast<size_t>(it - elements_.begin());
}

SympMatrix SpGroup::representative(size_t label) const { return SympMatrix(packed::unpack(reps_.at(label - 1), k_)); }

std::vector<uint64_t> SpGroup::class_members(size_t label) const {
    std::vector<uint64_t> out;
    for (size_t e = 0; e < elements_.size(); ++e) {
        if (label_[e] == label) out.push_back(elements_[e]);
    }
    return out;
}

size_t SpGroup::label_of_packed(uint64_t p) const { return label_[position(p)]; }

ClassId SpGroup::class_of(const BinMatrix& l) const {
    if (l.rows() != 2 * k_ || l.cols() != 2 * k_) throw std::invalid_argument("class_of: size mismatch");
    const uint64_t p = packed::pack(l);
    if (!packed::is_symplectic(p, k_)) throw std::invalid_argument("class_of: matrix is not symplectic");
    return {k_, label_of_packed(p)};
}

std::optional<SympMatrix> SpGroup::find_conjugator(const BinMatrix& l1, const BinMatrix& l2) const {
    const uint64_t a = packed::pack(l1);
    const uint64_t b = packed::pack(l2);
    if (!packed::is_symplectic(a, k_) || !packed::is_symplectic(b, k_)) {
        throw std::invalid_argument("find_conjugator: inputs must be symplectic");
    }
    if (label_of_packed(a) != label_of_packed(b)) return std::nullopt;
    if (a == b) return SympMatrix::identity(k_);
    // (A^-1)^T L1 A^T = L2  <=>  L1 A^T = A^T L2.
    for (uint64_t cand : elements_) {
        const uint64_t at = packed::transpose(cand, k_);
        if (packed::mul(a, at, k_) == packed::mul(at, b, k_)) return SympMatrix(packed::unpack(cand, k_));
    }
    throw std::logic_error("find_conjugator: no witness for conjugate matrices");
}

const SpGroup& sp_group(size_t k) {
    check_k(k);
    if (k == 1) {
        static const SpGroup g1(1);
        return g1;
    }
    if (k == 2) {
        static const SpGroup g2(2);
        return g2;
    }
    static const SpGroup g3(3);
    return g3;
}

std::vector<std::vector<uint64_t>> conjugacy_classes(const SpGroup& g) {
    std::vector<std::vector<uint64_t>> out(g.class_count());
    for (uint64_t e : g.elements()) out[g.label_of_packed(e) - 1].push_back(e);
    return out;
}

}  // namespace autopt
