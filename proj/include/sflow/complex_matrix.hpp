#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sflow {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(const std::vector<cplx>& d);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    // Frobenius norm.
    double norm() const;
    // Largest row-sum; cheap upper bound used by tail majorants.
    double normInf() const;
    // Operator 2-norm via the Hermitian eigensolver on X*X (see eigh.cpp).
    double norm2() const;

    double maxAbs() const;

    bool sameShape(const ComplexMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

// Dense product that skips structural zeros in the left factor, so products
// with banded operators stay near O(n^2).
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

// A*B - B*A
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
// A*B + B*A
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, outer factor first.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

bool approxEqual(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

// Square matrix with entry(i,j) == conj(entry(j,i)); construction enforces it.
class HermitianMatrix {
public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const ComplexMatrix& m, double relTol = 1e-12);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix& matrix() const { return m_; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

private:
    ComplexMatrix m_;
};

// Diagonal positive weight operator modelling the semifinite trace.
class TraceWeights {
public:
    TraceWeights() = default;
    explicit TraceWeights(std::vector<double> w);
    static TraceWeights ones(std::size_t n);

    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }
    const std::vector<double>& values() const { return w_; }
    double total() const;

private:
    std::vector<double> w_;
};

// tau(X) = sum_i w_i X_ii
cplx traceTau(const ComplexMatrix& x, const TraceWeights& w);

// tau(A*B) = sum_{ij} w_i A_ij B_ji without forming the product.
cplx traceTauProduct(const ComplexMatrix& a, const ComplexMatrix& b, const TraceWeights& w);

// Weighted trace norm tau(|X|), |X| = sqrt(X*X) via eigh.
double traceNorm(const ComplexMatrix& x, const TraceWeights& w);

} // namespace sflow
