#pragma once

// Partition combinatorics for SL(k+1), the reductive part of P_{k+1}:
// vertical-strip Pieri products, iterated wedge decompositions, conjugation,
// full-column normalization and Schur-module dimensions.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgbott/bott.hpp"

namespace lgbott {

// Weakly decreasing non-negative parts; trailing zeros are stripped, padded
// copies appear only at API boundaries.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    // 1^p, the single column of height p.
    static Partition ones(int p);

    const std::vector<Int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    Int part(int i) const {
        return i < rows() ? parts_[static_cast<size_t>(i)] : 0;
    }
    Int boxes() const;
    std::string str() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

  private:
    std::vector<Int> parts_;
};

// Multiplicity map; std::map keeps summands in lexicographic order, which is
// the canonical report order everywhere downstream.
using Decomposition = std::map<Partition, std::uint64_t>;

// All partitions obtained from pi by adding a vertical strip of j boxes
// (no two in the same row), keeping at most m rows.  Single steps are
// multiplicity-free.  Throws for j outside [0, m] or pi taller than m.
Decomposition pieri_wedge(const Partition& pi, int j, int m);

// Iterated Pieri product of wedge powers starting from the empty partition.
Decomposition decompose_wedges(const std::vector<int>& j_list, int m);

// Memo for decompose_wedges keyed on (m, sorted j-multiset); the product is
// independent of factor order.  One instance per worker thread.
class DecomposeCache {
  public:
    const Decomposition& get(std::vector<int> j_list, int m);

  private:
    std::map<std::pair<int, std::vector<int>>, Decomposition> memo_;
};

// Transpose of the Young diagram.
Partition conjugate(const Partition& pi);

// Dimension of the SL(m) Schur module indexed by pi (at most m rows).
BigInt sl_dim(const Partition& pi, int m);

// Remove full columns of height m: subtracts pi_m from every part and adds
// it to the twist.  weight_of is invariant under this rewriting.
std::pair<Partition, Int> normalize_columns(const Partition& pi, Int twist, int m);

}  // namespace lgbott
