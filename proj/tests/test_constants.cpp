#include <doctest.h>

#include "sflow/constants.hpp"
#include "sflow/quadrature.hpp"

#include <cmath>
#include <random>

using namespace sflow;

TEST_CASE("alpha: direct evaluations") {
    CHECK(alpha(MultiIndex{0}) == Rational(1));
    CHECK(alpha(MultiIndex{1, 0, 0}) == Rational(1, 24));
    CHECK(alpha(MultiIndex{0, 0}) == Rational(1, 2));
    CHECK_THROWS_AS(alpha(MultiIndex{}), std::invalid_argument);
}

TEST_CASE("sigmaCoeffs: small cases and invariants") {
    SymCoeffs s0 = sigmaCoeffs(0);
    REQUIRE(s0.coeffs.size() == 1);
    CHECK(s0.coeffs[0] == Rational(1));

    SymCoeffs s1 = sigmaCoeffs(1);
    REQUIRE(s1.coeffs.size() == 2);
    CHECK(s1.coeffs[0] == Rational(1, 2));
    CHECK(s1.coeffs[1] == Rational(1));

    SymCoeffs s2 = sigmaCoeffs(2);
    REQUIRE(s2.coeffs.size() == 3);
    CHECK(s2.coeffs[0] == Rational(3, 4));
    CHECK(s2.coeffs[1] == Rational(2));
    CHECK(s2.coeffs[2] == Rational(1));

    for (unsigned h = 1; h <= 12; ++h) {
        SymCoeffs s = sigmaCoeffs(h);
        CHECK(s.coeffs[h] == Rational(1));
        for (unsigned j = 0; j <= h; ++j) CHECK(s.coeffs[j] > 0);
        // sum_j sigma_{h,j} (1/2)^j = prod_{j=0}^{h-1} (j+1) = h!
        Rational eval(0), pw(1);
        for (unsigned j = 0; j <= h; ++j) {
            eval += s.coeffs[j] * pw;
            pw /= 2;
        }
        CHECK(eval == ratFactorial(h));
    }
}

TEST_CASE("sigmaCoeffs match elementary symmetric polynomials of half-integers") {
    // e_{h-j}(1/2, 3/2, ..., h-1/2) by direct recursion.
    for (unsigned h = 0; h <= 12; ++h) {
        std::vector<Rational> e(h + 1, Rational(0));
        e[0] = 1;
        for (unsigned t = 1; t <= h; ++t) {
            Rational x(2 * static_cast<long>(t) - 1, 2);
            for (unsigned j = std::min(t, h); j >= 1; --j) e[j] += x * e[j - 1];
        }
        SymCoeffs s = sigmaCoeffs(h);
        for (unsigned j = 0; j <= h; ++j) CHECK(s.coeffs[j] == e[h - j]);
    }
}

TEST_CASE("bigC: examples") {
    CHECK(bigC(MultiIndex{0}) == Rational(1));
    CHECK(bigC(MultiIndex{1}) == Rational(1));
    CHECK(bigC(MultiIndex{1, 1}) == Rational(3));
}

TEST_CASE("scriptC: values and Gamma functional-equation ratio") {
    cplx c1 = scriptC(1);
    cplx expected = -2.0 * std::sqrt(2.0 * M_PI) * std::polar(1.0, M_PI / 4.0);
    CHECK(std::abs(c1 - expected) <= 1e-12 * std::abs(expected));
    CHECK(std::abs(scriptC(3) - c1) <= 1e-12 * std::abs(c1)); // Gamma(2)=1

    for (int m = 1; m <= 9; m += 2) {
        cplx ratio = scriptC(m) / scriptC(m + 2);
        CHECK(std::abs(ratio - cplx(0.5 * (m + 1), 0.0)) <= 1e-12 * std::abs(ratio));
    }
    CHECK_THROWS_AS(scriptC(2), std::invalid_argument);
}

TEST_CASE("cBeta: closed forms and quadrature oracle") {
    CHECK(std::abs(cBeta(cplx(1.0)) - cplx(M_PI)) <= 1e-12);
    CHECK(std::abs(cBeta(cplx(1.5)) - cplx(2.0)) <= 1e-12);
    CHECK(std::abs(cBeta(cplx(3.0)) - cplx(3.0 * M_PI / 8.0)) <= 1e-12);
    CHECK_THROWS_AS(cBeta(cplx(0.25)), std::domain_error);

    for (double beta : {1.0, 1.5, 2.0, 3.0, 4.5}) {
        auto g = [beta](double x) { return cplx(std::pow(1.0 + x * x, -beta), 0.0); };
        auto tail = [beta](double S) {
            return std::pow(S, 1.0 - 2.0 * beta) / (2.0 * beta - 1.0);
        };
        QuadResult q = quadHalfLine(g, tail, 1e-11);
        CHECK(std::abs(2.0 * q.value - cBeta(cplx(beta))) <= 1e-9);
    }
}

TEST_CASE("gammaFn: special values") {
    CHECK(std::abs(gammaFn(cplx(0.5)) - cplx(std::sqrt(M_PI))) <= 1e-12);
    CHECK(std::abs(gammaFn(cplx(5.0)) - cplx(24.0)) <= 1e-10 * 24.0);
    // |Gamma(1+i)| from an offline high-order series evaluation.
    CHECK(std::abs(std::abs(gammaFn(cplx(1.0, 1.0))) - 0.4980156681) <= 1e-9);
    CHECK_THROWS_AS(gammaFn(cplx(-3.0, 0.0)), std::domain_error);
}

TEST_CASE("gammaFn: functional equation on a random strip grid") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> re(-10.0, 10.0), im(-10.0, 10.0);
    int checked = 0;
    while (checked < 100) {
        cplx z(re(rng), im(rng));
        if (std::abs(z.imag()) < 1e-3 && std::abs(z.real() - std::round(z.real())) < 1e-2)
            continue; // keep clear of the pole line
        cplx lhs = gammaFn(z + 1.0), rhs = z * gammaFn(z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(lhs));
        ++checked;
    }
}

TEST_CASE("nCap") {
    CHECK(nCap(1.0) == 1);
    CHECK(nCap(2.0) == 2);
    CHECK(nCap(2.5) == 2);
    CHECK(nCap(3.0) == 2);
    CHECK(nCap(4.0) == 3);
}
