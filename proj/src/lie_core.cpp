#include "lgbott/lie_core.hpp"

#include <sstream>
#include <stdexcept>

namespace lgbott {

bool Weight::p_dominant() const {
    for (int i = 0; i + 1 < rank(); ++i)
        if (coords[i] < 0) return false;
    return true;
}

bool Weight::g_dominant() const {
    for (Int c : coords)
        if (c < 0) return false;
    return true;
}

namespace {

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

std::string Weight::str() const { return vec_str(coords); }
std::string Root::str() const { return vec_str(coords); }

Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<Int> c(a.coords);
    for (int i = 0; i < b.rank(); ++i) c[i] += b.coords[i];
    return Weight(std::move(c));
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("weight rank mismatch");
    std::vector<Int> c(a.coords);
    for (int i = 0; i < b.rank(); ++i) c[i] -= b.coords[i];
    return Weight(std::move(c));
}

Weight rho(int m) {
    if (m < 1) throw std::invalid_argument("rho: rank must be >= 1");
    return Weight(std::vector<Int>(m, 1));
}

std::vector<Root> positive_roots(int m) {
    if (m < 1) throw std::invalid_argument("positive_roots: rank must be >= 1");
    std::vector<Root> roots;
    roots.reserve(static_cast<size_t>(m) * m);
    // alpha_i + ... + alpha_j, 1 <= i <= j <= m
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            std::vector<Int> c(m, 0);
            for (int l = i; l <= j; ++l) c[l] = 1;
            roots.emplace_back(std::move(c));
        }
    // alpha_i + ... + alpha_{j-1} + 2 alpha_j + ... + 2 alpha_{m-1} + alpha_m,
    // 1 <= i <= j <= m-1
    for (int i = 0; i + 1 < m; ++i)
        for (int j = i; j + 1 < m; ++j) {
            std::vector<Int> c(m, 0);
            for (int l = i; l < j; ++l) c[l] = 1;
            for (int l = j; l + 1 < m; ++l) c[l] = 2;
            c[m - 1] = 1;
            roots.emplace_back(std::move(c));
        }
    return roots;
}

Int pairing(const Weight& w, const Root& a) {
    if (w.rank() != a.rank()) throw std::invalid_argument("pairing: rank mismatch");
    const int m = w.rank();
    Int s = 0;
    for (int i = 0; i + 1 < m; ++i) s += w.coords[i] * a.coords[i];
    s += 2 * w.coords[m - 1] * a.coords[m - 1];
    return s;
}

EpsilonVector to_epsilon(const Weight& w) {
    const int m = w.rank();
    std::vector<Int> e(m, 0);
    Int acc = 0;
    for (int j = m - 1; j >= 0; --j) {
        acc += w.coords[j];
        e[j] = acc;
    }
    return EpsilonVector(std::move(e));
}

Weight from_epsilon(const EpsilonVector& e) {
    const int m = e.rank();
    std::vector<Int> c(m, 0);
    for (int i = 0; i + 1 < m; ++i) c[i] = e.entries[i] - e.entries[i + 1];
    if (m > 0) c[m - 1] = e.entries[m - 1];
    return Weight(std::move(c));
}

}  // namespace lgbott
