#include "lgbott/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace lgbott {

namespace {

Int floor_div(Int a, Int b) {
    const Int q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

// Pairings of weight_of(pi,t)+rho with the alpha_m-roots are s + 2t where s
// ranges over {e_i + e_j : i <= j} of the epsilon vector at t = 0 (i = j
// giving the doubled roots).  Pairings with the remaining roots are the
// t-independent differences e_i - e_j.
struct PairingProfile {
    std::vector<Int> sums;     // sorted
    int inversions = 0;        // negative differences
    bool diff_zero = false;    // some e_i == e_j: singular at every twist
};

PairingProfile pairing_profile(const Partition& pi, int k) {
    const int m = k + 1;
    const auto e = to_epsilon(weight_of(pi, 0, m) + rho(m)).entries;
    PairingProfile p;
    p.sums.reserve(static_cast<size_t>(m) * (m + 1) / 2);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            const Int d = e[i] - e[j];
            if (d == 0)
                p.diff_zero = true;
            else if (d < 0)
                ++p.inversions;
        }
        for (int j = i; j < m; ++j) p.sums.push_back(e[i] + e[j]);
    }
    std::sort(p.sums.begin(), p.sums.end());
    return p;
}

// Bott degree per twist across the critical window; -1 marks singular.
struct PartitionScan {
    Int lo = 0;
    Int hi = -1;
    std::vector<std::int16_t> degree;
};

PartitionScan make_partition_scan(const Partition& pi, int k) {
    const PairingProfile p = pairing_profile(pi, k);
    PartitionScan ps;
    ps.lo = -floor_div(p.sums.back(), 2);
    ps.hi = -ceil_div(p.sums.front(), 2);
    for (Int t = ps.lo; t <= ps.hi; ++t) {
        const Int threshold = -2 * t;  // pairing s + 2t is negative iff s < threshold
        if (p.diff_zero || std::binary_search(p.sums.begin(), p.sums.end(), threshold)) {
            ps.degree.push_back(-1);
            continue;
        }
        const auto below =
            std::lower_bound(p.sums.begin(), p.sums.end(), threshold) - p.sums.begin();
        ps.degree.push_back(static_cast<std::int16_t>(p.inversions + below));
    }
    return ps;
}

struct PartitionHash {
    size_t operator()(const Partition& p) const {
        size_t h = 1469598103934665603ull;
        for (Int x : p.parts()) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Shared read-mostly cache of per-summand windows, keyed by interned
// partition.  Losing an insertion race is harmless: entries are
// value-identical however they are computed.
class ScanContext {
  public:
    explicit ScanContext(int k) : k_(k) {}

    struct Item {
        const Partition* pi = nullptr;
        const PartitionScan* scan = nullptr;
    };

    Item get(const Partition& pi) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(pi); it != cache_.end())
                return {&it->first, it->second.get()};
        }
        auto scan = std::make_unique<const PartitionScan>(make_partition_scan(pi, k_));
        std::unique_lock lock(mutex_);
        auto it = cache_.try_emplace(pi, std::move(scan)).first;
        return {&it->first, it->second.get()};
    }

  private:
    int k_;
    std::shared_mutex mutex_;
    std::unordered_map<Partition, std::unique_ptr<const PartitionScan>, PartitionHash> cache_;
};

struct SummandEntry {
    const Partition* pi = nullptr;
    const PartitionScan* scan = nullptr;
    std::uint64_t mult = 0;
};

// Per-worker cache keyed on the sorted reduced j-multiset; the transient
// decomposition map is folded into compact scan-ready entries.
class WorkerCache {
  public:
    const std::vector<SummandEntry>& get(std::vector<int> kept, int m, ScanContext& ctx) {
        std::sort(kept.begin(), kept.end());
        auto key = std::make_pair(m, std::move(kept));
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            // Large factors first keeps intermediate products small.
            std::vector<int> desc(key.second.rbegin(), key.second.rend());
            std::vector<SummandEntry> list;
            for (const auto& [pi, mult] : decompose_wedges(desc, m)) {
                const auto item = ctx.get(pi);
                list.push_back(SummandEntry{item.pi, item.scan, mult});
            }
            it = entries_.emplace(std::move(key), std::move(list)).first;
        }
        return it->second;
    }

  private:
    std::map<std::pair<int, std::vector<int>>, std::vector<SummandEntry>> entries_;
};

std::vector<int> reduced_wedges(const ConditionTuple& tuple) {
    std::vector<int> kept;
    kept.reserve(tuple.wedges.size());
    for (int q = 0; q < tuple.k; ++q) {
        const int j = tuple.wedges[static_cast<size_t>(q)];
        // j_q = n-2k+q is the line-bundle placeholder slot
        if (j != tuple.n - 2 * tuple.k + q + 1) kept.push_back(j);
    }
    return kept;
}

std::vector<Violation> scan_tuple_impl(const ConditionTuple& tuple, WorkerCache& cache,
                                       ScanContext& ctx) {
    const int m = tuple.k + 1;
    std::vector<Violation> out;
    for (const auto& entry : cache.get(reduced_wedges(tuple), m, ctx)) {
        const PartitionScan& ps = *entry.scan;
        for (Int t = ps.lo; t <= ps.hi; ++t) {
            if (ps.degree[static_cast<size_t>(t - ps.lo)] != tuple.i) continue;
            const auto full = bott(weight_of(*entry.pi, t, m));
            out.push_back(Violation{tuple, *entry.pi, entry.mult, t, tuple.i,
                                    full.value->dominant, full.value->dimension});
        }
    }
    return out;
}

}  // namespace

std::vector<ConditionTuple> enumerate_conditions(CriterionMode mode, int k, int n) {
    if (k < 1) throw std::invalid_argument("enumerate_conditions: k must be >= 1");
    if (mode == CriterionMode::lagrangian) {
        if (n != 2 * k + 1)
            throw std::invalid_argument("enumerate_conditions: lagrangian mode needs n = 2k+1");
    } else {
        if (n % 2 == 0) throw std::invalid_argument("enumerate_conditions: n must be odd");
        if (n < 2 * k + 1) throw std::invalid_argument("enumerate_conditions: n must be >= 2k+1");
    }
    const int spread = n - 2 * k;
    std::vector<int> bound(static_cast<size_t>(k));
    for (int q = 0; q < k; ++q) bound[static_cast<size_t>(q)] = spread + q + 1;

    std::vector<ConditionTuple> out;
    std::vector<int> j(static_cast<size_t>(k), 0);
    for (;;) {
        const int sum = std::accumulate(j.begin(), j.end(), 0);
        for (int i = std::max(sum, 1); i < sum + spread; ++i)
            out.push_back(ConditionTuple{k, n, i, j});
        int q = k - 1;
        while (q >= 0 && j[static_cast<size_t>(q)] == bound[static_cast<size_t>(q)]) {
            j[static_cast<size_t>(q)] = 0;
            --q;
        }
        if (q < 0) break;
        ++j[static_cast<size_t>(q)];
    }
    return out;
}

TwistWindow critical_twist_window(const Partition& pi, int k) {
    const PairingProfile p = pairing_profile(pi, k);
    return TwistWindow{-floor_div(p.sums.back(), 2), -ceil_div(p.sums.front(), 2)};
}

std::vector<Violation> scan_tuple(const ConditionTuple& tuple) {
    if (tuple.n != 2 * tuple.k + 1)
        throw std::invalid_argument("scan_tuple: cohomology scans are defined on LG(k) only");
    ScanContext ctx(tuple.k);
    WorkerCache cache;
    return scan_tuple_impl(tuple, cache, ctx);
}

ScanSummary scan_tuples(const std::vector<ConditionTuple>& tuples, int k, int jobs) {
    if (jobs < 1) throw std::invalid_argument("scan_tuples: jobs must be >= 1");
    for (const auto& t : tuples)
        if (t.k != k || t.n != 2 * k + 1)
            throw std::invalid_argument("scan_tuples: tuples must all live on LG(k)");

    ScanContext ctx(k);
    std::vector<std::vector<Violation>> slots(tuples.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        WorkerCache cache;
        for (;;) {
            const size_t idx = next.fetch_add(1, std::memory_order_relaxed);
            if (idx >= tuples.size()) break;
            slots[idx] = scan_tuple_impl(tuples[idx], cache, ctx);
        }
    };
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    ScanSummary summary;
    summary.tuples_checked = tuples.size();
    for (auto& slot : slots)
        summary.violations.insert(summary.violations.end(),
                                  std::make_move_iterator(slot.begin()),
                                  std::make_move_iterator(slot.end()));
    return summary;
}

ScanSummary verify_criterion(CriterionMode mode, int k, int jobs) {
    if (mode != CriterionMode::lagrangian)
        throw std::invalid_argument(
            "verify_criterion: cohomology scanning is defined on LG(k) only");
    return scan_tuples(enumerate_conditions(mode, k, 2 * k + 1), k, jobs);
}

ChainSummary verify_chain_criterion(int k) {
    if (k < 1) throw std::invalid_argument("verify_chain_criterion: k must be >= 1");
    ChainSummary summary;
    for (int i = 1; i <= k; ++i) {
        const int m = i + 1;
        const int top = m * (m + 1) / 2;
        const int bound = std::min(2 * i + 2, top);
        for (int j = 1; j <= i + 1; ++j) {
            const Partition column = Partition::ones(j);
            const TwistWindow window = critical_twist_window(column, i);
            for (Int t = window.lo; t <= window.hi; ++t) {
                ++summary.checks;
                const auto deg = degree_by_pairing(weight_of(column, t, m) + rho(m));
                if (deg && *deg >= 1 && *deg <= bound)
                    summary.failures.push_back(ChainFailure{i, j, t, *deg});
            }
        }
    }
    return summary;
}

}  // namespace lgbott
