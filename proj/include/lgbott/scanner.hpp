#pragma once

// Exhaustive verification of the splitting-criterion condition sets on
// LG(k): enumerate condition tuples, compute the exact critical twist
// window of every summand, and report each non-singular Bott result that
// lands in a forbidden degree.

#include <cstdint>
#include <vector>

#include "lgbott/bundle.hpp"

namespace lgbott {

enum class CriterionMode {
    lagrangian,   // n = 2k+1, 0 <= j_q <= q+1, i = sum j_q > 0
    sufficient,   // 0 <= j_q <= n-2k+q, sum j_q <= i < sum j_q + n-2k, i > 0
};

struct ConditionTuple {
    int k = 0;
    int n = 0;
    int i = 0;                 // target cohomology degree
    std::vector<int> wedges;   // slot order j_1..j_k

    friend auto operator<=>(const ConditionTuple&, const ConditionTuple&) = default;
};

struct Violation {
    ConditionTuple tuple;
    Partition partition;
    std::uint64_t multiplicity = 0;
    Int twist = 0;
    int degree = 0;            // equals tuple.i
    Weight dominant;
    BigInt dimension;
};

// All condition tuples of the given mode in lexicographic order
// (j_1..j_k major, then i).  Tuples with i = 0 are excluded.
// Throws for even n or n < 2k+1.
std::vector<ConditionTuple> enumerate_conditions(CriterionMode mode, int k, int n);

// Closed interval of twists outside which the Bott degree of the summand
// plateaus: 0 above, dim LG(k) below.  Every pairing of
// weight_of(pi,t)+rho with an alpha_m-root is 2t + c, so the endpoints are
// determined by the extreme constants c.
struct TwistWindow {
    Int lo = 0;
    Int hi = -1;
};
TwistWindow critical_twist_window(const Partition& pi, int k);

// Violations of one tuple, ordered by (partition lexicographic, twist).
std::vector<Violation> scan_tuple(const ConditionTuple& tuple);

struct ScanSummary {
    std::uint64_t tuples_checked = 0;
    std::vector<Violation> violations;   // tuple enumeration order
};

// Scan an explicit tuple list (all sharing the same k) across a worker
// pool.  Output is independent of the job count: results are collected per
// tuple slot and concatenated in enumeration order.
ScanSummary scan_tuples(const std::vector<ConditionTuple>& tuples, int k, int jobs);

// Full scan of every enumerated tuple; lagrangian mode only.
ScanSummary verify_criterion(CriterionMode mode, int k, int jobs);

// Restriction-chain vanishing: every wedge_j Q*(t) on LG(i), 1 <= i <= k,
// 1 <= j <= i+1 and every twist in the critical window must be singular or
// carry cohomology outside [1, min(2i+2, dim LG(i))].
struct ChainFailure {
    int i = 0;
    int j = 0;
    Int twist = 0;
    int degree = 0;
};

struct ChainSummary {
    std::uint64_t checks = 0;
    std::vector<ChainFailure> failures;
};

ChainSummary verify_chain_criterion(int k);

}  // namespace lgbott
