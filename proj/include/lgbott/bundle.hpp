#pragma once

// Bundle expressions wedge_{j_k} Q* ⊗ ... ⊗ wedge_{j_1} Q* (t) on LG(k):
// the map from irreducible summands (partition, twist) to Bott input
// weights, per-degree cohomology aggregation, and the expression grammar.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lgbott/pieri.hpp"

namespace lgbott {

// Slot q (1-based) carries 0 <= j_q <= q+1.  A factor hitting the upper
// bound j_q = q+1 stands for a line bundle: it contributes no tensor factor
// but still counts toward the target degree sum.
struct BundleExpression {
    int k = 0;
    std::vector<int> wedges;        // slot order j_1..j_k, ascending
    std::optional<Int> twist;       // empty = symbolic "all twists"

    bool placeholder(int slot) const {  // slot is 0-based
        return wedges[static_cast<size_t>(slot)] == slot + 2;
    }
    // Wedge powers that actually enter the tensor product.
    std::vector<int> reduced_wedges() const;
    std::string str() const;
};

// Validates and canonicalizes a wedge multiset into slot order (ascending);
// throws std::invalid_argument when no slot assignment satisfies the bounds.
BundleExpression make_bundle_expression(int k, std::vector<int> wedges,
                                        std::optional<Int> twist);

struct BundleParseError : std::runtime_error {
    size_t position;
    BundleParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Grammar: EXPR := FACTOR ("*" FACTOR)* "(" INT ")" "@" "LG(" INT ")",
// FACTOR := "w" INT.  Whitespace insensitive, factors in any order.
BundleExpression parse_bundle_expression(std::string_view text);

// Bott input weight of the summand F^pi twisted by t:
// (pi_1 - pi_2, ..., pi_{m-1} - pi_m, pi_m + t).  Always P-dominant.
Weight weight_of(const Partition& pi, Int t, int m);

struct SummandCohomology {
    Partition partition;
    std::uint64_t multiplicity = 0;
    Int twist = 0;
    CohomologyResult result;
};

struct CohomologyReport {
    int k = 0;
    Int twist = 0;
    std::vector<SummandCohomology> summands;   // lexicographic in partition
    std::map<int, BigInt> aggregate;           // degree -> total dimension
};

// Pieri decomposition over the non-placeholder factors, one Bott run per
// distinct summand, multiplicity-weighted per-degree totals.
CohomologyReport bundle_cohomology(const BundleExpression& expr);

// Pairing table row for the bundle wedge_i Q*(t): one root containing
// alpha_m together with the constant c of its pairing value 2t + c.
struct LadderEntry {
    Root root;
    Int constant;
};

// All alpha_m-containing positive roots paired against the rho-shifted
// weight of wedge_i Q*(t), sorted by constant (then by root), so values are
// non-decreasing in t-independent order.  Roots without alpha_m pair to
// t-independent positive constants and are omitted.
std::vector<LadderEntry> pairing_ladder(int k, int wedge);

}  // namespace lgbott
