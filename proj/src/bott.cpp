#include "lgbott/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgbott {

// The positive roots of C_m in epsilon coordinates are e_i - e_j and
// e_i + e_j for i < j, and 2 e_i.  Their pairings with a weight are the
// corresponding differences, sums and doubles of its epsilon entries, so
// signs can be counted without materializing the root list.
std::optional<int> degree_by_pairing(const Weight& shifted) {
    const auto e = to_epsilon(shifted).entries;
    const int m = static_cast<int>(e.size());
    int neg = 0;
    for (int i = 0; i < m; ++i) {
        if (e[i] == 0) return std::nullopt;  // 2 e_i = 0
        if (e[i] < 0) ++neg;
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Int d = e[i] - e[j];
            const Int s = e[i] + e[j];
            if (d == 0 || s == 0) return std::nullopt;
            if (d < 0) ++neg;
            if (s < 0) ++neg;
        }
    return neg;
}

BigInt module_dimension(const Weight& mu) {
    if (!mu.g_dominant())
        throw std::invalid_argument("module_dimension: weight is not G-dominant");
    const int m = mu.rank();
    const auto v = to_epsilon(mu + rho(m)).entries;  // strictly decreasing, positive
    // rho has epsilon coordinates (m, m-1, ..., 1).
    BigInt num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= v[i];
        den *= m - i;
        for (int j = i + 1; j < m; ++j) {
            num *= (v[i] - v[j]) * (v[i] + v[j]);
            den *= static_cast<Int>(j - i) * static_cast<Int>(2 * m - i - j);
        }
    }
    if (num % den != 0)
        throw std::logic_error("module_dimension: non-integral Weyl quotient");
    return num / den;
}

CohomologyResult bott(const Weight& lambda) {
    if (!lambda.p_dominant())
        throw std::invalid_argument("bott: weight is not P-dominant");
    const int m = lambda.rank();
    const Weight shifted = lambda + rho(m);
    const auto deg = degree_by_pairing(shifted);
    if (!deg) return CohomologyResult::make_singular();

    auto e = to_epsilon(shifted).entries;
    for (Int& x : e)
        if (x < 0) x = -x;
    std::sort(e.begin(), e.end(), std::greater<>());
    const Weight dominant = from_epsilon(EpsilonVector(std::move(e))) - rho(m);
    if (!dominant.g_dominant())
        throw std::logic_error("bott: normalized weight not G-dominant");
    return CohomologyResult::make(*deg, dominant, module_dimension(dominant));
}

}  // namespace lgbott
