#include "sflow/constants.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sflow {

std::vector<MultiIndex> allMultiIndices(unsigned m, unsigned maxTotal) {
    std::vector<MultiIndex> out;
    MultiIndex cur(std::vector<unsigned>(m, 0));
    std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned used) {
        if (pos == m) {
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; used + k <= maxTotal; ++k) {
            cur.parts[pos] = k;
            rec(pos + 1, used + k);
        }
        cur.parts[pos] = 0;
    };
    if (m > 0) rec(0, 0);
    return out;
}

Rational alpha(const MultiIndex& k) {
    if (k.size() == 0) throw std::invalid_argument("alpha: empty multi-index");
    Rational denom(1);
    unsigned running = 0;
    for (unsigned i = 0; i < k.size(); ++i) {
        denom *= ratFactorial(k.parts[i]);
        running += k.parts[i];
        denom *= Rational(static_cast<long>(running + i + 1));
    }
    return Rational(1) / denom;
}

SymCoeffs sigmaCoeffs(unsigned h) {
    // Expand prod_{j=0}^{h-1} (z + (2j+1)/2) iteratively.
    SymCoeffs sc;
    sc.h = h;
    sc.coeffs.assign(1, Rational(1));
    for (unsigned j = 0; j < h; ++j) {
        Rational root(2 * static_cast<long>(j) + 1, 2);
        std::vector<Rational> next(sc.coeffs.size() + 1, Rational(0));
        for (std::size_t t = 0; t < sc.coeffs.size(); ++t) {
            next[t] += sc.coeffs[t] * root; // constant part
            next[t + 1] += sc.coeffs[t];    // z part
        }
        sc.coeffs = std::move(next);
    }
    return sc;
}

Rational bigC(const MultiIndex& k) {
    return ratFactorial(k.total() + k.size()) * alpha(k);
}

cplx sqrtTwoPiI() {
    // Principal branch; the paper fixes it only implicitly, so the choice
    // lives here and cancels in the spectral flow normalisation.
    return std::sqrt(2.0 * M_PI) * std::polar(1.0, M_PI / 4.0);
}

cplx scriptC(int m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("scriptC: m must be odd and >= 1");
    return -2.0 * sqrtTwoPiI() / gammaFn(cplx(0.5 * (m + 1), 0.0));
}

cplx cBeta(cplx beta) {
    if (beta.real() <= 0.5) throw std::domain_error("cBeta: need Re beta > 1/2");
    return gammaFn(beta - 0.5) * gammaFn(cplx(0.5, 0.0)) / gammaFn(beta);
}

namespace {

// Lanczos g=7, n=9 coefficients.
constexpr double lanczosG = 7.0;
constexpr double lanczosC[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

cplx gammaLanczos(cplx z) {
    // Valid for Re z >= 0.5.
    z -= 1.0;
    cplx x = lanczosC[0];
    for (int i = 1; i < 9; ++i) x += lanczosC[i] / (z + cplx(double(i), 0.0));
    cplx t = z + lanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

} // namespace

cplx gammaFn(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw std::domain_error("gammaFn: pole at nonpositive integer " +
                                std::to_string(static_cast<long>(z.real())));
    if (z.real() < 0.5) {
        // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return M_PI / (std::sin(M_PI * z) * gammaFn(1.0 - z));
    }
    return gammaLanczos(z);
}

int nCap(double p) {
    if (p < 1.0) throw std::invalid_argument("nCap: need p >= 1");
    return static_cast<int>(std::floor(p / 2.0)) + 1;
}

} // namespace sflow
