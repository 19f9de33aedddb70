// Acceptance suite: one pass/fail line per criterion.
//
//   1  degree-24 counterexample reproduced exactly through the CLI
//   2  clean scans for k = 1..6 within their time budgets
//   3  the full k=7 scan and its restriction to the four listed multisets
//   4  symbolic pairing ladder of wedge_i Q*(t)
//   5  chain-criterion vanishing for k = 1..6
//   6  naive-condition failure witness on LG(2)
//   7  property suites (walk lengths, bookkeeping, canonical bundles,
//      window soundness, scan determinism)
//
// Usage: lgbott_acceptance [--criterion N]

#include <algorithm>
#include <chrono>
#include <cstring>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lgbott/scanner.hpp"
#include "oracles.hpp"

using namespace lgbott;
using nlohmann::json;

namespace {

const std::string BIN = LGBOTT_BIN;

int hw_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

double elapsed_s(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

struct Detail {
    std::ostringstream os;
    bool ok = true;

    template <typename T>
    Detail& operator<<(const T& v) {
        os << v;
        return *this;
    }
    void fail() { ok = false; }
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            os << "  - FAILED: " << what << '\n';
        }
    }
};

std::string fingerprint(const ScanSummary& s) {
    std::string out = std::to_string(s.tuples_checked);
    for (const auto& v : s.violations) {
        out += '|';
        for (int j : v.tuple.wedges) out += std::to_string(j) + ',';
        out += v.partition.str() + ';' + std::to_string(v.twist) + ';' +
               std::to_string(v.degree) + ';' + v.dimension.str() + ';' +
               std::to_string(v.multiplicity) + ';' + v.dominant.str();
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

bool criterion1(Detail& d) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = oracles::run_cmd(
        BIN + " cohom --k 7 --wedges 6,5,4,3,3,2,1 --twist -9 --format json");
    const double secs = elapsed_s(start);
    d.expect(r.exit_code == 0, "cohom exited " + std::to_string(r.exit_code));
    bool saw_summand = false, saw_aggregate = false;
    for (const auto& line : lines_of(r.out)) {
        const json j = json::parse(line);
        if (j["type"] == "aggregate") {
            saw_aggregate = true;
            d.expect(j["degrees"] == json{{"24", "1"}},
                     "aggregate is " + j["degrees"].dump() + ", want {\"24\":\"1\"}");
        } else if (j["partition"] == json::array({7, 6, 5, 3, 2, 1})) {
            saw_summand = true;
            d.expect(j["singular"] == false && j["degree"] == 24 && j["dimension"] == "1" &&
                         j["dominant"] == json::array({0, 0, 0, 0, 0, 0, 0, 0}),
                     "summand (7,6,5,3,2,1) record mismatch: " + line);
        }
    }
    d.expect(saw_summand, "summand (7,6,5,3,2,1) missing");
    d.expect(saw_aggregate, "aggregate record missing");
    d.expect(secs < 5.0, "runtime " + std::to_string(secs) + "s exceeds 5s");
    d << "  - aggregate {24: 1} via summand (7,6,5,3,2,1), dominant 0, in " << secs << "s\n";
    return d.ok;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2(Detail& d) {
    const auto t14 = std::chrono::steady_clock::now();
    for (int k = 1; k <= 4; ++k) {
        const auto r = oracles::run_cmd(BIN + " verify --criterion question1 --k " +
                                        std::to_string(k) + " --out /dev/null");
        d.expect(r.exit_code == 0, "k=" + std::to_string(k) + " not clean");
    }
    const double secs14 = elapsed_s(t14);
    d.expect(secs14 < 60.0, "k=1..4 took " + std::to_string(secs14) + "s, budget 60s");
    d << "  - k=1..4 clean in " << secs14 << "s\n";

    const auto t5 = std::chrono::steady_clock::now();
    const auto r5 = oracles::run_cmd(BIN + " verify --criterion question1 --k 5 --out /dev/null");
    const double secs5 = elapsed_s(t5);
    d.expect(r5.exit_code == 0, "k=5 not clean");
    d.expect(secs5 < 600.0, "k=5 took " + std::to_string(secs5) + "s, budget 600s");
    d << "  - k=5 clean in " << secs5 << "s\n";

    const auto t6 = std::chrono::steady_clock::now();
    const auto r6 = oracles::run_cmd(BIN + " verify --criterion question1 --k 6 --out /dev/null");
    const double secs6 = elapsed_s(t6);
    d.expect(r6.exit_code == 0, "k=6 not clean");
    d.expect(secs6 < 7200.0, "k=6 took " + std::to_string(secs6) + "s, budget 2h");
    d << "  - k=6 clean in " << secs6 << "s\n";
    return d.ok;
}

// ---------------------------------------------------------------- criterion 3

const std::vector<std::pair<std::vector<int>, std::vector<Int>>> listed_pairs = {
    {{1, 2, 3, 3, 4, 5, 6}, {7, 6, 5, 3, 2, 1}},
    {{1, 2, 3, 3, 5, 5, 5}, {6, 6, 6, 3, 3}},
    {{1, 2, 3, 3, 5, 5, 5}, {7, 6, 5, 3, 2, 1}},
    {{1, 2, 3, 4, 4, 4, 6}, {7, 5, 5, 5, 1, 1}},
    {{1, 2, 3, 4, 4, 4, 6}, {7, 6, 5, 3, 2, 1}},
    {{1, 2, 3, 4, 4, 5, 5}, {6, 6, 5, 5, 2}},
    {{1, 2, 3, 4, 4, 5, 5}, {6, 6, 6, 3, 3}},
    {{1, 2, 3, 4, 4, 5, 5}, {7, 5, 5, 5, 1, 1}},
    {{1, 2, 3, 4, 4, 5, 5}, {7, 6, 5, 3, 2, 1}},
};

bool criterion3(Detail& d) {
    const auto t_filtered = std::chrono::steady_clock::now();
    const auto row = oracles::run_cmd(BIN +
                                      " verify --criterion question1 --k 7"
                                      " --tuple 6,5,4,3,3,2,1 --out /dev/null");
    const double secs_filtered = elapsed_s(t_filtered);
    d.expect(row.exit_code == 1, "--tuple run should exit 1");
    d.expect(secs_filtered < 60.0,
             "--tuple run took " + std::to_string(secs_filtered) + "s, budget 60s");
    d << "  - single-row --tuple rerun in " << secs_filtered << "s\n";

    const auto full_cli =
        oracles::run_cmd(BIN + " verify --criterion question1 --k 7 --out /dev/null");
    d.expect(full_cli.exit_code == 1, "full k=7 CLI scan should exit with violations");

    const auto t_full = std::chrono::steady_clock::now();
    const ScanSummary full = verify_criterion(CriterionMode::lagrangian, 7, hw_jobs());
    const double secs_full = elapsed_s(t_full);
    d.expect(full.tuples_checked == 181439, "tuple count");
    d.expect(!full.violations.empty(), "k=7 scan found no violations");
    for (const auto& v : full.violations)
        if (v.degree != v.tuple.i) {
            d.expect(false, "violation degree differs from tuple target");
            break;
        }

    std::set<std::vector<int>> listed_multisets;
    for (const auto& [ms, pi] : listed_pairs) listed_multisets.insert(ms);
    std::set<std::pair<std::vector<int>, Partition>> restricted;
    for (const auto& v : full.violations) {
        auto sorted = v.tuple.wedges;
        std::sort(sorted.begin(), sorted.end());
        if (listed_multisets.contains(sorted)) restricted.emplace(sorted, v.partition);
    }
    std::set<std::pair<std::vector<int>, Partition>> expected;
    for (const auto& [ms, pi] : listed_pairs) expected.emplace(ms, Partition(pi));
    d.expect(restricted == expected,
             "restricted (multiset, partition) pairs differ from the nine listed");
    d << "  - full scan: " << full.violations.size() << " violation records over "
      << full.tuples_checked << " tuples in " << secs_full << "s; restriction = 9 listed pairs\n";
    return d.ok;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4(Detail& d) {
    const std::vector<Int> ladder = {2, 3, 4, 4, 5, 5, 6, 6, 6};
    for (const int k : {3, 5}) {
        for (int i = 1; i < k; ++i) {
            const auto entries = pairing_ladder(k, i);
            std::vector<Int> first;
            for (size_t r = 0; r < entries.size() && r < 9; ++r)
                first.push_back(entries[r].constant);
            std::ostringstream got;
            for (size_t r = 0; r < first.size(); ++r) got << (r ? "," : "") << "2t+" << first[r];
            if (first == ladder) {
                d << "  - k=" << k << " wedge=" << i << ": matches the nine-step ladder\n";
            } else {
                d.fail();
                d << "  - k=" << k << " wedge=" << i << ": FAILED, first nine pairings are "
                  << got.str() << '\n';
            }
        }
    }
    if (!d.ok)
        d << "  - note: the nine-step ladder 2t+2,2t+3,2t+4,2t+4,2t+5,2t+5,2t+6,2t+6,2t+6\n"
             "    requires the wedge index to sit at distance >= 4 from the tail\n"
             "    (wedge <= k-4); closer wedges shift rows of the table upward and\n"
             "    rank k=3 has too few twist-dependent roots for three 2t+6 rows.\n"
             "    The failing cases above print the true sorted pairing constants.\n";
    return d.ok;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5(Detail& d) {
    for (int k = 1; k <= 6; ++k) {
        const auto summary = verify_chain_criterion(k);
        d.expect(summary.failures.empty(),
                 "chain criterion failed at k=" + std::to_string(k));
        d << "  - k=" << k << ": " << summary.checks << " window twists, 0 failures\n";
    }
    return d.ok;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6(Detail& d) {
    struct Rec {
        Partition pi;
        Int t = 0;
        int degree = 0;
        BigInt dim;
    };
    std::vector<Rec> records;
    for (const auto& [pi, mult] : decompose_wedges({1, 1}, 3)) {
        const auto w = critical_twist_window(pi, 2);
        for (Int t = w.lo; t <= w.hi; ++t) {
            const auto r = bott(weight_of(pi, t, 3));
            if (r.singular()) continue;
            if (r.value->degree == 0 || r.value->degree == 6) continue;
            records.push_back(Rec{pi, t, r.value->degree, r.value->dimension});
        }
    }
    d.expect(records.size() == 1, "expected exactly one intermediate-degree record");
    if (records.size() == 1) {
        const auto& r = records[0];
        d.expect(r.pi == Partition({2}), "witness summand is " + r.pi.str());
        d.expect(r.t == -4, "witness twist is " + std::to_string(r.t));
        d.expect(r.degree == 5 && r.degree != 2, "witness degree is " +
                                                     std::to_string(r.degree));
        d.expect(r.dim == 1, "witness dimension is " + r.dim.str());
        d << "  - wedges (1,1) on LG(2): summand " << r.pi.str() << " at twist " << r.t
          << " has H^" << r.degree << " of dimension " << r.dim.str()
          << " (degree != 2, inside 0 < d < 6)\n";
    }
    return d.ok;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7(Detail& d) {
    const auto start = std::chrono::steady_clock::now();

    // (a) pairing degree equals reflection-walk length
    {
        std::mt19937_64 rng(101);
        std::uint64_t checked = 0;
        bool ok = true;
        for (int m = 2; m <= 8 && ok; ++m) {
            for (int trial = 0; trial < 10000; ++trial) {
                const Weight lambda = oracles::random_p_dominant(rng, m);
                const Weight shifted = lambda + rho(m);
                const auto fast = degree_by_pairing(shifted);
                const auto walk = oracles::reflection_walk_length(to_epsilon(shifted).entries);
                if (fast != walk) {
                    d.expect(false, "degree/walk mismatch at " + lambda.str());
                    ok = false;
                    break;
                }
                ++checked;
            }
        }
        d << "  - degree == reflection length on " << checked << " shifted weights\n";
    }

    // (b) Pieri dimension bookkeeping over every wedge tuple, k <= 5
    {
        std::uint64_t checked = 0;
        for (int k = 1; k <= 5; ++k) {
            const int m = k + 1;
            std::vector<int> js(static_cast<size_t>(k), 0);
            for (;;) {
                BigInt total = 0;
                for (const auto& [pi, mult] : decompose_wedges(js, m))
                    total += BigInt(mult) * sl_dim(pi, m);
                BigInt expected = 1;
                for (int q = 0; q < k; ++q) {
                    BigInt num = 1, den = 1;
                    for (int r = 0; r < js[static_cast<size_t>(q)]; ++r) {
                        num *= m - r;
                        den *= r + 1;
                    }
                    expected *= num / den;
                }
                if (total != expected) {
                    std::string tuple;
                    for (int x : js) tuple += std::to_string(x) + ",";
                    d.expect(false, "bookkeeping failed at k=" + std::to_string(k) +
                                        " tuple " + tuple);
                }
                ++checked;
                int q = k - 1;
                while (q >= 0 && js[static_cast<size_t>(q)] == q + 2)
                    js[static_cast<size_t>(q--)] = 0;
                if (q < 0) break;
                ++js[static_cast<size_t>(q)];
            }
        }
        d << "  - dimension bookkeeping on " << checked << " wedge tuples (k <= 5)\n";
    }

    // (c) canonical-bundle checks, k <= 6
    {
        for (int k = 1; k <= 6; ++k) {
            const int m = k + 1;
            auto line = [&](Int t) {
                std::vector<Int> c(static_cast<size_t>(m), 0);
                c[static_cast<size_t>(m - 1)] = t;
                return Weight(c);
            };
            const auto canonical = bott(line(-(k + 2)));
            d.expect(!canonical.singular() && canonical.value->degree == m * (m + 1) / 2 &&
                         canonical.value->dimension == 1 &&
                         canonical.value->dominant ==
                             Weight(std::vector<Int>(static_cast<size_t>(m), 0)),
                     "canonical bundle check failed at k=" + std::to_string(k));
            for (Int t = -(k + 2) + 1; t < 0; ++t)
                d.expect(bott(line(t)).singular(),
                         "line bundle t=" + std::to_string(t) + " on LG(" +
                             std::to_string(k) + ") should be singular");
            for (Int t = 0; t <= 2; ++t) {
                const auto r = bott(line(t));
                d.expect(!r.singular() && r.value->degree == 0,
                         "line bundle t=" + std::to_string(t) + " should sit in degree 0");
            }
        }
        d << "  - canonical and intermediate line bundles, k <= 6\n";
    }

    // (d) window soundness against +/-10 brute force
    {
        std::mt19937_64 rng(103);
        int samples = 0;
        while (samples < 200) {
            const int k = 1 + static_cast<int>(rng() % 6);
            const int m = k + 1;
            const Partition pi = oracles::random_partition(rng, m, 7);
            const auto w = critical_twist_window(pi, k);
            const int top = m * (m + 1) / 2;
            for (Int t = w.lo - 10; t < w.lo; ++t)
                d.expect(degree_by_pairing(weight_of(pi, t, m) + rho(m)) == top,
                         "below-window degree not top for " + pi.str());
            for (Int t = w.hi + 1; t <= w.hi + 10; ++t)
                d.expect(degree_by_pairing(weight_of(pi, t, m) + rho(m)) == 0,
                         "above-window degree not 0 for " + pi.str());
            ++samples;
        }
        d << "  - window plateaus on 200 random summands, +/-10 twist padding\n";
    }

    // (e) determinism across jobs 1, 4, 8
    {
        const auto a = verify_criterion(CriterionMode::lagrangian, 3, 1);
        const auto b = verify_criterion(CriterionMode::lagrangian, 3, 4);
        const auto c = verify_criterion(CriterionMode::lagrangian, 3, 8);
        d.expect(fingerprint(a) == fingerprint(b) && fingerprint(a) == fingerprint(c),
                 "clean k=3 scan differs across jobs");

        auto tuples = enumerate_conditions(CriterionMode::lagrangian, 7, 15);
        const std::vector<int> want = {1, 2, 3, 4, 4, 5, 5};
        std::erase_if(tuples, [&](const ConditionTuple& t) {
            auto sorted = t.wedges;
            std::sort(sorted.begin(), sorted.end());
            return sorted != want;
        });
        const auto va = scan_tuples(tuples, 7, 1);
        const auto vb = scan_tuples(tuples, 7, 4);
        const auto vc = scan_tuples(tuples, 7, 8);
        d.expect(!va.violations.empty(), "restricted k=7 scan found nothing");
        d.expect(fingerprint(va) == fingerprint(vb) && fingerprint(va) == fingerprint(vc),
                 "violating scan differs across jobs");
        d << "  - identical output at jobs 1, 4, 8 (clean k=3 and violating k=7 subsets)\n";
    }

    const double secs = elapsed_s(start);
    d.expect(secs < 300.0, "property suites took " + std::to_string(secs) + "s, budget 300s");
    d << "  - total property-suite time " << secs << "s\n";
    return d.ok;
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    if (only < 0 || only > 7) {
        std::cerr << "usage: lgbott_acceptance [--criterion 1..7]\n";
        return 2;
    }

    struct Entry {
        int id;
        const char* name;
        bool (*run)(Detail&);
    };
    const std::vector<Entry> entries = {
        {1, "counterexample reproduction (LG(7), degree 24)", criterion1},
        {2, "clean scans for k = 1..6", criterion2},
        {3, "k=7 violation set", criterion3},
        {4, "symbolic pairing ladder", criterion4},
        {5, "chain-criterion vanishing for k = 1..6", criterion5},
        {6, "naive-condition failure witness on LG(2)", criterion6},
        {7, "property suites", criterion7},
    };

    bool all_ok = true;
    for (const auto& entry : entries) {
        if (only != 0 && entry.id != only) continue;
        Detail d;
        const bool ok = entry.run(d);
        all_ok = all_ok && ok;
        std::cout << "CRITERION " << entry.id << ' ' << (ok ? "PASS" : "FAIL") << ": "
                  << entry.name << '\n'
                  << d.os.str();
        std::cout.flush();
    }
    return all_ok ? 0 : 1;
}
