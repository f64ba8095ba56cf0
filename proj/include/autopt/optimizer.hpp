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

#ifndef AUTOPT_OPTIMIZER_HPP
#define AUTOPT_OPTIMIZER_HPP

#include <map>
#include <string>
#include <vector>

#include "autopt/autgroup.hpp"
#include "autopt/logical.hpp"

namespace autopt {

enum class MetricKind { ControlledClifford, LocalClifford };

struct Metric {
    MetricKind kind = MetricKind::ControlledClifford;
    unsigned swap_weight = 7;

    static Metric controlled_clifford(unsigned swap_weight = 7) { return {MetricKind::ControlledClifford, swap_weight}; }
    static Metric local_clifford() { return {MetricKind::LocalClifford, 0}; }
    /// 1 or 2, as numbered in the results tables.
    static Metric from_number(int number);
    int number() const { return kind == MetricKind::ControlledClifford ? 1 : 2; }
    const char* name() const;

    unsigned cost(const MonomialOp& op) const { return swap_weight * swap_count(op) + clifford_count(op); }
};

class EmptyClass : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct OptResult {
    ClassId cls;
    unsigned cost = 0;
    MonomialOp circuit;
    /// The automorphism of the input code that circuit is conjugate to.
    MonomialOp source;
    MonomialOp tau;
    SympMatrix a;
    StabCode code_out;
    LogicalAction realized;
    /// False only if the search could not cover the whole Hamming group.
    bool exhaustive = true;
    std::string method;
};

/// Least cost conjugate g pi g^-1 of pi over the whole Hamming group, ties
/// broken by circuit then g in serialization order.
struct Conjugate {
    unsigned cliffords = 0;
    MonomialOp circuit;
    MonomialOp g;
};

/// Elements of the materialized group, bucketed by the class of their
/// logical action. Empty classes are absent.
std::map<ClassId, std::vector<MonomialOp>> classify_automorphisms(const StabCode& code, const SearchBudget& budget = {});

/// Number of cycles of pi whose ordered product of local parts is not I.
size_t min_cliffords_over_conjugation(const MonomialOp& pi);
/// A g reaching that count, with sigma_g = identity.
MonomialOp canonical_conjugator(const MonomialOp& pi);

/// Exact search, one qubit cycle at a time: for each sigma_g giving the least
/// conjugate permutation, the locals of every cycle are minimised
/// independently (cycles share no gamma entries).
Conjugate best_conjugate(const MonomialOp& pi);

/// Reference: every g in the Hamming group, n <= 5.
Conjugate brute_conjugate(const MonomialOp& pi);
Conjugate brute_conjugate_serial(const MonomialOp& pi);

OptResult optimize(const StabCode& code, ClassId cls, const Metric& metric, const SearchBudget& budget = {});

/// One row per non-empty class in label order; class 1 only on request.
std::vector<OptResult> full_table(const StabCode& code, const Metric& metric, bool include_identity = false,
                                  const SearchBudget& budget = {});

/// Minimum metric cost over every g and every pi in the class, using only
/// brute_automorphisms, compose and inverse. n <= 5.
unsigned brute_oracle(const StabCode& code, ClassId cls, const Metric& metric);
/// All classes and metrics in one pass: result[metric index][class] = cost.
std::vector<std::map<ClassId, unsigned>> brute_oracle_table(const StabCode& code, const std::vector<Metric>& metrics);
std::vector<std::map<ClassId, unsigned>> brute_oracle_table_serial(const StabCode& code, const std::vector<Metric>& metrics);

/// Search restricted to the given code and basis: circuits pi in Gamma(C)
/// with L(pi, B) equal to target. Cost -> least such pi.
std::map<unsigned, MonomialOp> fixed_basis_costs(const StabCode& code, const BinMatrix& target, const Metric& metric);
/// Basis change allowed, no code equivalence: pi in the class of target.
std::map<unsigned, MonomialOp> basis_change_costs(const StabCode& code, const BinMatrix& target, const Metric& metric);

/// Re-derives the logical action of a result from its witnesses. Empty on
/// success, otherwise a description of the first mismatch.
std::string verify_result(const OptResult& r, const Metric& metric);

}  // namespace autopt

#endif  // AUTOPT_OPTIMIZER_HPP
