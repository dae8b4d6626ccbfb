#pragma once

#include "sflow/complex_matrix.hpp"
#include "sflow/eigh.hpp"

#include <map>
#include <string>

namespace sflow {

enum class TruncationMode { plain, circulant };

// Finite representation of (A, H, D, tau): Hermitian D, named algebra
// generators, positive trace weights and the nominal spectral dimension p.
struct SpectralTripleRep {
    HermitianMatrix D;
    std::map<std::string, ComplexMatrix> gens;
    TraceWeights weights;
    double p = 1.0;
    std::string label;
    TruncationMode truncationMode = TruncationMode::plain;

    std::size_t dim() const { return D.dim(); }
    const ComplexMatrix& gen(const std::string& name) const;

    // Checks [W, D] = 0 and unitarity of generators flagged as unitary.
    void validate() const;

    std::string toJson() const;
    static SpectralTripleRep fromJson(const std::string& text);
};

// Circle triple: D = diag(-N..N), u the winding-one shift. Plain truncation
// keeps the infinite model away from the edges but breaks unitarity;
// circulant wraps around and is exactly unitary.
SpectralTripleRep circleTriple(int cutoff, TruncationMode mode = TruncationMode::plain);

// u^w for the circle triple (w may be negative; w=0 gives the identity).
ComplexMatrix circlePower(const SpectralTripleRep& t, int w);

// Block-diagonal sum with per-block trace weights; generator names must match.
SpectralTripleRep weightedSumTriple(const SpectralTripleRep& t1, const SpectralTripleRep& t2,
                                    double w1, double w2);

// The doubled package of the flow-integral rewrite: Dt = s2 (x) 1 (x) D,
// q built from a unitary, grading Gamma = s2 (x) s3 (x) 1, rho = s2 (x) 1 (x) 1.
struct DoubledTriple {
    HermitianMatrix Dt;
    HermitianMatrix q;
    HermitianMatrix gamma;
    HermitianMatrix rho;
    ComplexMatrix anti; // {Dt, q}
    TraceWeights weights4;
    double p = 1.0;

    std::size_t dim() const { return Dt.dim(); }

    // Supertrace S tau(X) = (1/2) tau(Gamma X).
    cplx supertrace(const ComplexMatrix& x) const;
};

DoubledTriple doubleUp(const SpectralTripleRep& t, const std::string& uName);
DoubledTriple doubleUp(const SpectralTripleRep& t, const ComplexMatrix& u);

// T^{(n)} = [D^2, [D^2, ... [D^2, T]...]], n commutators.
ComplexMatrix iteratedComm(const SpectralTripleRep& t, const ComplexMatrix& T, unsigned n);

// Trace-norm bound for (1+D^2+s^2+sA)^{-p/2-r}:
//   C_{p+eps} (1/2 + s^2 - s*normA)^{-rRe+eps},
// C_{p+eps} = ||(1/2+D^2)^{-(pEff/2+eps)}||_1. Requires normA < sqrt(2).
double tailBoundBIG(const SpectralTripleRep& t, double normA, double pEff, double rRe,
                    double eps, double s);

// Same bound computed from an explicit Hermitian operator and weights
// (used on the doubled space).
double tailBoundBIGFor(const HermitianMatrix& D, const TraceWeights& w, double normA,
                       double pEff, double rRe, double eps, double s);

} // namespace sflow
