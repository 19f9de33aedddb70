#include "lgbott/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lgbott {

std::vector<int> BundleExpression::reduced_wedges() const {
    std::vector<int> kept;
    for (int q = 0; q < k; ++q)
        if (!placeholder(q)) kept.push_back(wedges[static_cast<size_t>(q)]);
    return kept;
}

std::string BundleExpression::str() const {
    std::ostringstream os;
    for (int q = k - 1; q >= 0; --q) {
        os << 'w' << wedges[static_cast<size_t>(q)];
        if (q) os << '*';
    }
    os << '(';
    if (twist)
        os << *twist;
    else
        os << 't';
    os << ") @ LG(" << k << ')';
    return os.str();
}

BundleExpression make_bundle_expression(int k, std::vector<int> wedges,
                                        std::optional<Int> twist) {
    if (k < 1) throw std::invalid_argument("bundle expression: k must be >= 1");
    if (static_cast<int>(wedges.size()) != k)
        throw std::invalid_argument("bundle expression: expected exactly " +
                                    std::to_string(k) + " wedge factors, got " +
                                    std::to_string(wedges.size()));
    // Ascending assignment is optimal: if any slot assignment satisfies the
    // bounds j_q <= q+1, the sorted one does.
    std::sort(wedges.begin(), wedges.end());
    for (int q = 0; q < k; ++q) {
        const int j = wedges[static_cast<size_t>(q)];
        if (j < 0)
            throw std::invalid_argument("bundle expression: negative wedge power");
        if (j > q + 2)
            throw std::invalid_argument(
                "bundle expression: wedge multiset not realizable, factor w" +
                std::to_string(j) + " exceeds bound " + std::to_string(q + 2) +
                " for slot " + std::to_string(q + 1));
    }
    return BundleExpression{k, std::move(wedges), twist};
}

namespace {

struct Cursor {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) throw BundleParseError(std::string("expected ") + what, pos);
    }
    Int integer() {
        skip_ws();
        const size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        size_t digits = 0;
        Int v = 0;
        bool neg = start < pos && text[start] == '-';
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            ++pos;
            ++digits;
        }
        if (digits == 0) throw BundleParseError("expected integer", start);
        return neg ? -v : v;
    }
};

}  // namespace

BundleExpression parse_bundle_expression(std::string_view text) {
    Cursor c{text};
    std::vector<int> wedges;
    for (;;) {
        c.skip_ws();
        if (c.pos >= text.size() || (text[c.pos] != 'w' && text[c.pos] != 'W'))
            throw BundleParseError("expected wedge factor 'w<INT>'", c.pos);
        ++c.pos;
        const Int j = c.integer();
        if (j < 0) throw BundleParseError("wedge power must be non-negative", c.pos);
        wedges.push_back(static_cast<int>(j));
        if (!c.eat('*')) break;
    }
    c.expect('(', "'(' before twist");
    const Int twist = c.integer();
    c.expect(')', "')' after twist");
    c.expect('@', "'@'");
    c.skip_ws();
    if (text.substr(c.pos, 2) != "LG")
        throw BundleParseError("expected 'LG(<INT>)'", c.pos);
    c.pos += 2;
    c.expect('(', "'(' after LG");
    const Int k = c.integer();
    c.expect(')', "')' after LG rank");
    c.skip_ws();
    if (c.pos != text.size())
        throw BundleParseError("trailing input after expression", c.pos);
    if (k < 1 || k > 64) throw BundleParseError("LG rank out of range", c.pos);
    return make_bundle_expression(static_cast<int>(k), std::move(wedges), twist);
}

Weight weight_of(const Partition& pi, Int t, int m) {
    if (pi.rows() > m)
        throw std::invalid_argument("weight_of: partition taller than rank");
    std::vector<Int> coords(static_cast<size_t>(m), 0);
    for (int i = 0; i + 1 < m; ++i) coords[static_cast<size_t>(i)] = pi.part(i) - pi.part(i + 1);
    coords[static_cast<size_t>(m - 1)] = pi.part(m - 1) + t;
    return Weight(std::move(coords));
}

CohomologyReport bundle_cohomology(const BundleExpression& expr) {
    if (!expr.twist)
        throw std::invalid_argument("bundle_cohomology: twist must be concrete");
    const int m = expr.k + 1;
    const Int t = *expr.twist;
    CohomologyReport report;
    report.k = expr.k;
    report.twist = t;
    for (const auto& [pi, mult] : decompose_wedges(expr.reduced_wedges(), m)) {
        SummandCohomology sc{pi, mult, t, bott(weight_of(pi, t, m))};
        if (!sc.result.singular()) {
            const auto& ns = *sc.result.value;
            report.aggregate[ns.degree] += BigInt(mult) * ns.dimension;
        }
        report.summands.push_back(std::move(sc));
    }
    return report;
}

std::vector<LadderEntry> pairing_ladder(int k, int wedge) {
    const int m = k + 1;
    if (wedge < 0 || wedge > m)
        throw std::invalid_argument("pairing_ladder: wedge power outside [0, k+1]");
    const Weight shifted = weight_of(Partition::ones(wedge), 0, m) + rho(m);
    std::vector<LadderEntry> out;
    for (const Root& a : positive_roots(m)) {
        if (a.coords[static_cast<size_t>(m - 1)] == 0) continue;
        // alpha_m appears with coefficient 1, so the pairing is 2t + c.
        out.push_back(LadderEntry{a, pairing(shifted, a)});
    }
    std::sort(out.begin(), out.end(), [](const LadderEntry& x, const LadderEntry& y) {
        return x.constant != y.constant ? x.constant < y.constant : x.root < y.root;
    });
    return out;
}

}  // namespace lgbott
