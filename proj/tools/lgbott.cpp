// lgbott — exact cohomology of wedge-power quotient-bundle twists on the
// Lagrangian Grassmannian LG(k), and exhaustive splitting-criterion scans.
//
// Subcommands:
//   cohom     per-summand Bott results and degree aggregate of one bundle
//   verify    criterion scans (question1 | chain | sufficient-enumerate)
//   pairings  twist-dependent pairing table for wedge_i Q*(t)
//
// Exit codes: 0 verified clean / success, 1 violations found, 2 usage or
// input error.  Records go to stdout (or --out); summaries go to stderr.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lgbott/scanner.hpp"

namespace {

using nlohmann::json;
using namespace lgbott;

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        const int v = std::stoi(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

json to_json(const std::vector<Int>& v) { return json(v); }

json violation_json(const Violation& v) {
    return json{{"k", v.tuple.k},
                {"tuple", v.tuple.wedges},
                {"partition", v.partition.parts()},
                {"twist", v.twist},
                {"degree", v.degree},
                {"dominant", to_json(v.dominant.coords)},
                {"dimension", v.dimension.str()},
                {"multiplicity", v.multiplicity}};
}

std::string tuple_str(const std::vector<int>& w) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

std::string quoted_vec(const std::vector<Int>& v) {
    std::ostringstream os;
    os << '"';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ' ';
        os << v[i];
    }
    os << '"';
    return os.str();
}

std::string quoted_vec(const std::vector<int>& v) {
    return quoted_vec(std::vector<Int>(v.begin(), v.end()));
}

void write_violation(std::ostream& os, const Violation& v, const std::string& format) {
    if (format == "json") {
        os << violation_json(v).dump() << '\n';
    } else if (format == "csv") {
        os << v.tuple.k << ',' << quoted_vec(v.tuple.wedges) << ','
           << quoted_vec(v.partition.parts()) << ',' << v.twist << ',' << v.degree << ','
           << quoted_vec(v.dominant.coords) << ',' << v.dimension.str() << ','
           << v.multiplicity << '\n';
    } else {
        os << "VIOLATION k=" << v.tuple.k << " tuple=" << tuple_str(v.tuple.wedges)
           << " i=" << v.tuple.i << " partition=" << v.partition.str()
           << " mult=" << v.multiplicity << " twist=" << v.twist << " degree=" << v.degree
           << " dominant=" << v.dominant.str() << " dim=" << v.dimension.str() << '\n';
    }
}

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

int default_jobs() {
    if (const char* env = std::getenv("LGBOTT_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

int run_cohom(const BundleExpression& expr, const std::string& format, Output& out) {
    const CohomologyReport report = bundle_cohomology(expr);
    const int m = report.k + 1;
    std::ostream& os = out.stream();
    if (format == "csv") os << "partition,multiplicity,twist,singular,degree,dominant,dimension\n";
    for (const auto& s : report.summands) {
        if (format == "json") {
            json j{{"type", "summand"},
                   {"partition", s.partition.parts()},
                   {"multiplicity", s.multiplicity},
                   {"twist", s.twist},
                   {"singular", s.result.singular()}};
            if (!s.result.singular()) {
                j["degree"] = s.result.value->degree;
                j["dominant"] = to_json(s.result.value->dominant.coords);
                j["dimension"] = s.result.value->dimension.str();
            }
            os << j.dump() << '\n';
        } else if (format == "csv") {
            os << quoted_vec(s.partition.parts()) << ',' << s.multiplicity << ',' << s.twist
               << ',' << (s.result.singular() ? 1 : 0) << ',';
            if (s.result.singular())
                os << ",,\n";
            else
                os << s.result.value->degree << ',' << quoted_vec(s.result.value->dominant.coords)
                   << ',' << s.result.value->dimension.str() << '\n';
        } else {
            os << "summand " << s.partition.str() << " mult=" << s.multiplicity << ": ";
            if (s.result.singular())
                os << "singular\n";
            else
                os << "degree=" << s.result.value->degree
                   << " dominant=" << s.result.value->dominant.str()
                   << " dim=" << s.result.value->dimension.str() << '\n';
        }
    }
    if (format == "json") {
        json degrees = json::object();
        for (const auto& [d, dim] : report.aggregate) degrees[std::to_string(d)] = dim.str();
        os << json{{"type", "aggregate"},
                   {"k", report.k},
                   {"twist", report.twist},
                   {"degrees", degrees}}
                  .dump()
           << '\n';
    } else if (format == "text") {
        if (report.aggregate.empty()) {
            os << "aggregate: all cohomology vanishes\n";
        } else {
            for (const auto& [d, dim] : report.aggregate)
                os << "aggregate: H^" << d << " dimension " << dim.str() << '\n';
        }
    }
    std::cerr << "cohom " << expr.str() << ": " << report.summands.size() << " summands on LG("
              << report.k << "), rank m=" << m << '\n';
    return 0;
}

int run_verify_question1(int k, int jobs, const std::optional<std::vector<int>>& tuple_filter,
                         const std::string& format, Output& out) {
    std::vector<ConditionTuple> tuples =
        enumerate_conditions(CriterionMode::lagrangian, k, 2 * k + 1);
    if (tuple_filter) {
        std::vector<int> want = *tuple_filter;
        std::sort(want.begin(), want.end());
        std::vector<ConditionTuple> kept;
        for (auto& t : tuples) {
            std::vector<int> sorted = t.wedges;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == want) kept.push_back(std::move(t));
        }
        if (kept.empty())
            throw std::invalid_argument("--tuple multiset matches no condition tuple");
        tuples = std::move(kept);
    }
    const ScanSummary summary = scan_tuples(tuples, k, jobs);
    std::ostream& os = out.stream();
    if (format == "csv")
        os << "k,tuple,partition,twist,degree,dominant,dimension,multiplicity\n";
    for (const auto& v : summary.violations) write_violation(os, v, format);
    std::cerr << "verify question1 k=" << k << ": checked " << summary.tuples_checked
              << " tuples, found " << summary.violations.size() << " violations\n";
    return summary.violations.empty() ? 0 : 1;
}

int run_verify_chain(int k, const std::string& format, Output& out) {
    const ChainSummary summary = verify_chain_criterion(k);
    std::ostream& os = out.stream();
    if (format == "csv") os << "i,j,twist,degree\n";
    for (const auto& f : summary.failures) {
        if (format == "json")
            os << json{{"i", f.i}, {"j", f.j}, {"twist", f.twist}, {"degree", f.degree}}.dump()
               << '\n';
        else if (format == "csv")
            os << f.i << ',' << f.j << ',' << f.twist << ',' << f.degree << '\n';
        else
            os << "FAILURE LG(" << f.i << ") wedge=" << f.j << " twist=" << f.twist
               << " degree=" << f.degree << '\n';
    }
    std::cerr << "verify chain k=" << k << ": " << summary.checks << " checks, "
              << summary.failures.size() << " failures\n";
    return summary.failures.empty() ? 0 : 1;
}

int run_verify_sufficient(int k, int n, const std::string& format, Output& out) {
    const auto tuples = enumerate_conditions(CriterionMode::sufficient, k, n);
    std::ostream& os = out.stream();
    if (format == "csv") os << "k,n,i,wedges\n";
    for (const auto& t : tuples) {
        if (format == "json")
            os << json{{"k", t.k}, {"n", t.n}, {"i", t.i}, {"wedges", t.wedges}}.dump() << '\n';
        else if (format == "csv")
            os << t.k << ',' << t.n << ',' << t.i << ',' << quoted_vec(t.wedges) << '\n';
        else
            os << "tuple k=" << t.k << " n=" << t.n << " i=" << t.i
               << " wedges=" << tuple_str(t.wedges) << '\n';
    }
    std::cerr << "sufficient-enumerate k=" << k << " n=" << n << ": " << tuples.size()
              << " condition tuples\n";
    return 0;
}

int run_pairings(int k, int wedge, std::optional<Int> twist, const std::string& format,
                 Output& out) {
    const auto ladder = pairing_ladder(k, wedge);
    std::ostream& os = out.stream();
    if (format == "csv") os << "constant,value,root\n";
    for (const auto& entry : ladder) {
        std::string symbolic = "2t+" + std::to_string(entry.constant);
        if (entry.constant < 0) symbolic = "2t" + std::to_string(entry.constant);
        if (format == "json") {
            json j{{"constant", entry.constant},
                   {"symbolic", symbolic},
                   {"root", to_json(entry.root.coords)}};
            if (twist) j["value"] = 2 * *twist + entry.constant;
            os << j.dump() << '\n';
        } else if (format == "csv") {
            os << entry.constant << ',';
            if (twist) os << 2 * *twist + entry.constant;
            os << ',' << quoted_vec(entry.root.coords) << '\n';
        } else {
            if (twist)
                os << (2 * *twist + entry.constant);
            else
                os << symbolic;
            os << "  root=" << entry.root.str() << '\n';
        }
    }
    std::cerr << "pairings k=" << k << " wedge=" << wedge << ": " << ladder.size()
              << " twist-dependent roots\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Bott-algorithm cohomology on Lagrangian Grassmannians"};
    app.require_subcommand(1);

    // cohom
    auto* cohom = app.add_subcommand("cohom", "cohomology of one bundle expression");
    int c_k = 0;
    std::string c_wedges, c_expr, c_format = "text", c_out;
    std::optional<Int> c_twist;
    cohom->add_option("--k", c_k, "isotropic index k of LG(k)");
    cohom->add_option("--wedges", c_wedges, "comma-separated wedge powers (any order)");
    cohom->add_option("--twist", c_twist, "line-bundle twist t");
    cohom->add_option("--expr", c_expr, "bundle expression, e.g. \"w2*w1(-3) @ LG(2)\"");
    cohom->add_option("--format", c_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cohom->add_option("--out", c_out, "output file (default stdout)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a criterion scan");
    std::string v_criterion, v_format = "text", v_out, v_tuple;
    int v_k = 0, v_n = 0, v_jobs = default_jobs();
    verify->add_option("--criterion", v_criterion, "question1 | chain | sufficient-enumerate")
        ->required()
        ->check(CLI::IsMember({"question1", "chain", "sufficient-enumerate"}));
    verify->add_option("--k", v_k, "isotropic index k")->required();
    verify->add_option("--n", v_n, "ambient dimension n (sufficient-enumerate; default 2k+1)");
    verify->add_option("--jobs", v_jobs, "worker threads (default: LGBOTT_JOBS or hardware)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--tuple", v_tuple, "restrict question1 scan to one wedge multiset");
    verify->add_option("--format", v_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--out", v_out, "output file (default stdout)");

    // pairings
    auto* pairings = app.add_subcommand("pairings", "pairing table of wedge_i Q*(t)");
    int p_k = 0, p_wedge = 0;
    std::optional<Int> p_twist;
    std::string p_format = "text", p_out;
    pairings->add_option("--k", p_k, "isotropic index k")->required();
    pairings->add_option("--wedge", p_wedge, "wedge power i")->required();
    pairings->add_option("--twist", p_twist, "concrete twist (omit for symbolic 2t+c)");
    pairings->add_option("--format", p_format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    pairings->add_option("--out", p_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(cohom)) {
            BundleExpression expr;
            if (!c_expr.empty()) {
                expr = parse_bundle_expression(c_expr);
                if (c_twist) expr.twist = c_twist;
            } else {
                if (c_k < 1) throw std::invalid_argument("cohom: --k (or --expr) is required");
                if (c_wedges.empty()) throw std::invalid_argument("cohom: --wedges is required");
                if (!c_twist) throw std::invalid_argument("cohom: --twist is required");
                expr = make_bundle_expression(c_k, parse_int_list(c_wedges), c_twist);
            }
            if (!expr.twist) throw std::invalid_argument("cohom: twist must be concrete");
            Output out(c_out);
            return run_cohom(expr, c_format, out);
        }
        if (app.got_subcommand(verify)) {
            Output out(v_out);
            if (v_criterion == "question1") {
                std::optional<std::vector<int>> filter;
                if (!v_tuple.empty()) filter = parse_int_list(v_tuple);
                return run_verify_question1(v_k, v_jobs, filter, v_format, out);
            }
            if (v_criterion == "chain") return run_verify_chain(v_k, v_format, out);
            return run_verify_sufficient(v_k, v_n > 0 ? v_n : 2 * v_k + 1, v_format, out);
        }
        if (app.got_subcommand(pairings)) {
            Output out(p_out);
            return run_pairings(p_k, p_wedge, p_twist, p_format, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
