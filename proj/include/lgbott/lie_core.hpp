#pragma once

// Exact integer combinatorics of the root system C_m = Sp(2m).
//
// Weights live in fundamental-weight coordinates (lambda_1..lambda_m),
// roots in simple-root coordinates (a_1..a_m).  The epsilon coordinates
// e_j = sum_{i>=j} lambda_i give the orthogonal-basis picture in which
// the Weyl group acts by signed permutations; they are the fast path for
// making weights dominant.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lgbott {

using Int = std::int64_t;

// Weight in fundamental-weight coordinates.
struct Weight {
    std::vector<Int> coords;

    Weight() = default;
    explicit Weight(std::vector<Int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }

    // All entries except possibly the last are non-negative.
    bool p_dominant() const;
    // All entries non-negative.
    bool g_dominant() const;

    std::string str() const;

    friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);

// Root in simple-root coordinates.
struct Root {
    std::vector<Int> coords;

    Root() = default;
    explicit Root(std::vector<Int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    std::string str() const;

    friend auto operator<=>(const Root&, const Root&) = default;
};

// Orthogonal-basis coordinates e_1..e_m.
struct EpsilonVector {
    std::vector<Int> entries;

    EpsilonVector() = default;
    explicit EpsilonVector(std::vector<Int> e) : entries(std::move(e)) {}

    int rank() const { return static_cast<int>(entries.size()); }

    friend auto operator<=>(const EpsilonVector&, const EpsilonVector&) = default;
};

// Half-sum of positive roots: the all-ones weight.
Weight rho(int m);

// The m^2 positive roots of C_m.  Strings alpha_i+...+alpha_j first,
// then the roots with a doubled run ending in alpha_m.
// Throws std::invalid_argument for m < 1.
std::vector<Root> positive_roots(int m);

// <lambda, a> = sum_{i<m} lambda_i a_i + 2 lambda_m a_m.
// Signs and zeros agree with the orthogonal-basis inner product.
Int pairing(const Weight& w, const Root& a);

EpsilonVector to_epsilon(const Weight& w);
Weight from_epsilon(const EpsilonVector& e);

}  // namespace lgbott
