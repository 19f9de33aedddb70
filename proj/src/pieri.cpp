#include "lgbott/pieri.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lgbott {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be non-negative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::ones(int p) {
    return Partition(std::vector<Int>(static_cast<size_t>(p), 1));
}

Int Partition::boxes() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Decomposition pieri_wedge(const Partition& pi, int j, int m) {
    if (j < 0 || j > m)
        throw std::invalid_argument("pieri_wedge: wedge power outside [0, m]");
    if (pi.rows() > m)
        throw std::invalid_argument("pieri_wedge: partition taller than rank");

    Decomposition out;
    std::vector<Int> next(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i) next[static_cast<size_t>(i)] = pi.part(i);

    // Choose the j rows receiving a box; weak decrease must survive.
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (remaining == 0) {
            out.emplace(Partition(next), 1);
            return;
        }
        if (m - row < remaining) return;
        self(self, row + 1, remaining);  // skip this row
        const Int grown = pi.part(row) + 1;
        if (row == 0 || next[static_cast<size_t>(row - 1)] >= grown) {
            next[static_cast<size_t>(row)] = grown;
            self(self, row + 1, remaining - 1);
            next[static_cast<size_t>(row)] = pi.part(row);
        }
    };
    rec(rec, 0, j);
    return out;
}

Decomposition decompose_wedges(const std::vector<int>& j_list, int m) {
    Decomposition acc;
    acc.emplace(Partition(), 1);
    for (int j : j_list) {
        if (j < 0 || j > m)
            throw std::invalid_argument("decompose_wedges: wedge power outside [0, m]");
        Decomposition next;
        for (const auto& [pi, mult] : acc)
            for (const auto& [lam, one] : pieri_wedge(pi, j, m))
                next[lam] += mult * one;
        acc = std::move(next);
    }
    return acc;
}

const Decomposition& DecomposeCache::get(std::vector<int> j_list, int m) {
    std::sort(j_list.begin(), j_list.end());
    auto key = std::make_pair(m, std::move(j_list));
    auto it = memo_.find(key);
    if (it == memo_.end())
        it = memo_.emplace(key, decompose_wedges(key.second, m)).first;
    return it->second;
}

Partition conjugate(const Partition& pi) {
    if (pi.rows() == 0) return Partition();
    std::vector<Int> cols(static_cast<size_t>(pi.part(0)), 0);
    for (int i = 0; i < pi.rows(); ++i)
        for (Int c = 0; c < pi.part(i); ++c) ++cols[static_cast<size_t>(c)];
    return Partition(std::move(cols));
}

BigInt sl_dim(const Partition& pi, int m) {
    if (pi.rows() > m)
        throw std::invalid_argument("sl_dim: partition taller than rank");
    BigInt num = 1, den = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            num *= pi.part(i) - pi.part(j) + (j - i);
            den *= j - i;
        }
    if (num % den != 0) throw std::logic_error("sl_dim: non-integral Weyl quotient");
    return num / den;
}

std::pair<Partition, Int> normalize_columns(const Partition& pi, Int twist, int m) {
    if (pi.rows() > m)
        throw std::invalid_argument("normalize_columns: partition taller than rank");
    const Int full = pi.rows() == m ? pi.part(m - 1) : 0;
    if (full == 0) return {pi, twist};
    std::vector<Int> parts;
    parts.reserve(static_cast<size_t>(pi.rows()));
    for (int i = 0; i < pi.rows(); ++i) parts.push_back(pi.part(i) - full);
    return {Partition(std::move(parts)), twist + full};
}

}  // namespace lgbott
