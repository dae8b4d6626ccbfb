#pragma once

#include "sflow/complex_matrix.hpp"
#include "sflow/rational.hpp"

#include <vector>

namespace sflow {

// Multi-index (k_1,...,k_m), all parts >= 0.
struct MultiIndex {
    std::vector<unsigned> parts;

    MultiIndex() = default;
    MultiIndex(std::initializer_list<unsigned> p) : parts(p) {}
    explicit MultiIndex(std::vector<unsigned> p) : parts(std::move(p)) {}

    unsigned size() const { return static_cast<unsigned>(parts.size()); }
    unsigned total() const {
        unsigned s = 0;
        for (unsigned k : parts) s += k;
        return s;
    }
};

// Enumerate all multi-indices of length m with |k| <= maxTotal, lexicographic.
std::vector<MultiIndex> allMultiIndices(unsigned m, unsigned maxTotal);

// alpha(k) = 1/(k_1!...k_m! (k_1+1)(k_1+k_2+2)...(|k|+m))
Rational alpha(const MultiIndex& k);

// Coefficients of prod_{j=0}^{h-1}(z+j+1/2) = sum_j sigma_{h,j} z^j,
// the elementary symmetric functions of 1/2, 3/2, ..., h-1/2.
struct SymCoeffs {
    unsigned h = 0;
    std::vector<Rational> coeffs; // coeffs[j] = sigma_{h,j}, j = 0..h
};
SymCoeffs sigmaCoeffs(unsigned h);

// C(k) = (|k|+m)! alpha(k)
Rational bigC(const MultiIndex& k);

// scriptC(m) = -2 sqrt(2 pi i) / Gamma((m+1)/2), m odd; principal branch
// sqrt(2 pi i) = sqrt(2 pi) e^{i pi/4}.
cplx scriptC(int m);
cplx sqrtTwoPiI();

// C_beta = Int_R (1+x^2)^{-beta} dx = Gamma(beta-1/2)Gamma(1/2)/Gamma(beta), Re beta > 1/2.
cplx cBeta(cplx beta);

// Complex Gamma via Lanczos; reflection formula for Re z < 1/2.
cplx gammaFn(cplx z);

// N = [p/2] + 1
int nCap(double p);

} // namespace sflow
