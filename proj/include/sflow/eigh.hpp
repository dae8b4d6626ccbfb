#pragma once

#include "sflow/complex_matrix.hpp"

#include <functional>
#include <vector>

namespace sflow {

// Eigenvalues ascending, eigenvectors as unitary columns.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic Jacobi for Hermitian matrices with a deterministic sweep order.
// The matrix is first split into connected components of its sparsity
// graph (structural zeros only), so banded operators cost O(n) blocks of
// small Jacobi problems instead of one dense solve.
EigenDecomposition eigh(const HermitianMatrix& h);

// Eigenvalues only, same algorithm.
std::vector<double> eighValues(const HermitianMatrix& h);

// V diag(f(lambda_i)) V*. Throws if f is undefined (non-finite) at an
// eigenvalue, naming the eigenvalue.
ComplexMatrix funcCalc(const HermitianMatrix& h, const std::function<cplx(double)>& f);

// sum_{ij} w_i L_ij f(H)_ji without materialising f(H); block-sparse aware.
cplx funcCalcTrace(const HermitianMatrix& h, const std::function<cplx(double)>& f,
                   const ComplexMatrix& left, const TraceWeights& w);

} // namespace sflow
