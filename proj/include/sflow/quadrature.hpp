#pragma once

#include "sflow/complex_matrix.hpp"

#include <functional>

namespace sflow {

struct QuadResult {
    cplx value{0.0, 0.0};
    double errorEstimate = 0.0;
};

// Vertical line l = {a+iv : |v| <= vMax}, 0 < a < 1/2.
struct ContourSpec {
    double a = 0.25;
    double vMax = 1e4;
    double relTol = 1e-8;
    int maxSubdiv = 2000;
    double absTol = 0.0; // absolute floor for near-cancelling integrands
};

// Adaptive GK15 on [lo, hi]; err <= max(absTol, relTol*|value|) on success.
QuadResult quadInterval(const std::function<cplx(double)>& f, double lo, double hi,
                        double relTol, double absTol = 0.0, int maxSubdiv = 2000);

// (1/2pi i) Int_l f(lambda) dlambda on the truncated line, oriented so that
// (1/2pi i) Int_l lambda^{-z} (lambda-Q)^{-1} dlambda = Q^{-z} for spectrum
// right of the line. The caller supplies the integrand's polynomial decay
// exponent; the tail is bounded by Int_{vMax}^inf C v^{-decay} dv in closed
// form with C read off at the truncation points.
QuadResult quadVerticalLine(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                            double decay);

// Int_0^inf g(s) ds with a caller-supplied tail majorant tail(S) >= |Int_S^inf g|.
// S doubles until tail(S) <= max(absTol, relTol*|partial|).
QuadResult quadHalfLine(const std::function<cplx(double)>& g,
                        const std::function<double(double)>& tail,
                        double relTol, double absTol = 0.0, int maxSubdiv = 4000);

} // namespace sflow
