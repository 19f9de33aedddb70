#pragma once

// Bott's algorithm on LG(k) = Sp(2(k+1))/P_{k+1}.
//
// A P-dominant weight is shifted by rho and paired against every positive
// root of C_m.  A zero pairing makes the weight singular: all cohomology of
// the associated bundle vanishes.  Otherwise the number of negative pairings
// is the unique degree carrying cohomology, and sorting the absolute values
// of the epsilon coordinates recovers the G-dominant representative.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "lgbott/lie_core.hpp"

namespace lgbott {

using BigInt = boost::multiprecision::cpp_int;

struct CohomologyResult {
    struct NonSingular {
        int degree = 0;
        Weight dominant;
        BigInt dimension;
    };

    // Empty means singular: cohomology vanishes in every degree.
    std::optional<NonSingular> value;

    bool singular() const { return !value.has_value(); }

    static CohomologyResult make_singular() { return {}; }
    static CohomologyResult make(int degree, Weight dominant, BigInt dim) {
        return {NonSingular{degree, std::move(dominant), std::move(dim)}};
    }
};

// Takes the ALREADY rho-shifted weight.  Returns std::nullopt when some
// positive-root pairing vanishes, otherwise the count of negative pairings.
std::optional<int> degree_by_pairing(const Weight& shifted);

// Full run of the algorithm on a P-dominant weight; the rho shift happens
// here.  Throws std::invalid_argument on non-P-dominant input.
CohomologyResult bott(const Weight& lambda);

// Dimension of the irreducible Sp(2m)-module with G-dominant highest
// weight mu (Weyl dimension formula, exact arithmetic).
BigInt module_dimension(const Weight& mu);

}  // namespace lgbott
