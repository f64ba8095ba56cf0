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

// Outputs must not depend on the number of worker threads.

#include <omp.h>

#include <random>

#include "autopt/optimizer.hpp"
#include "doctest.h"

using namespace autopt;

namespace {

struct Snapshot {
    std::vector<MonomialOp> group;
    std::vector<MonomialOp> orbit_taus;
    std::vector<std::tuple<size_t, unsigned, MonomialOp, MonomialOp, BinMatrix>> table;
    std::vector<MonomialOp> conjugates;
};

Snapshot run(const std::string& name, int threads) {
    omp_set_num_threads(threads);
    const StabCode code = builtin(name);
    Snapshot s;
    s.group = automorphism_group(code).elements;
    for (const auto& e : code_orbit(code).entries) s.orbit_taus.push_back(e.tau);
    for (int m : {1, 2})
        for (const auto& r : full_table(code, Metric::from_number(m), true))
            s.table.emplace_back(r.cls.index, r.cost, r.circuit, r.tau, r.a.mat());
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 5 && code.n() <= 5; ++rep) {
        const MonomialOp pi = hamming_element(code.n(), rng() % hamming_order(code.n()));
        const auto c = brute_conjugate(pi);
        s.conjugates.push_back(c.circuit);
        s.conjugates.push_back(c.g);
    }
    return s;
}

}  // namespace

TEST_CASE("results are identical for 1 and 4 threads") {
    const int saved = omp_get_max_threads();
    for (const auto& name : {"4_2_2", "5_1_3", "5_2_1", "6_1_3"}) {
        CAPTURE(name);
        const Snapshot one = run(name, 1);
        const Snapshot four = run(name, 4);
        CHECK(one.group == four.group);
        CHECK(one.orbit_taus == four.orbit_taus);
        CHECK(one.table == four.table);
        CHECK(one.conjugates == four.conjugates);
    }
    omp_set_num_threads(saved);
}

TEST_CASE("serial references agree with the parallel kernels") {
    for (const auto& name : {"4_1_2", "5_2_2"}) {
        CAPTURE(name);
        const StabCode code = builtin(name);
        CHECK(brute_automorphisms_serial(code) == brute_automorphisms(code));
        const std::vector<Metric> metrics = {Metric::from_number(1), Metric::from_number(2)};
        CHECK(brute_oracle_table_serial(code, metrics) == brute_oracle_table(code, metrics));
    }
}
