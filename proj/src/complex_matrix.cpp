#include "sflow/complex_matrix.hpp"
#include "sflow/eigh.hpp"

#include <algorithm>
#include <cmath>

namespace sflow {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = std::conj(data_[i]);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    if (!sameShape(o)) throw std::invalid_argument("matrix shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    if (!sameShape(o)) throw std::invalid_argument("matrix shape mismatch in -=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : data_) v *= s;
    return *this;
}

double ComplexMatrix::norm() const {
    double s = 0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::normInf() const {
    double best = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        double s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexMatrix::maxAbs() const {
    double best = 0;
    for (const auto& v : data_) best = std::max(best, std::abs(v));
    return best;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { a += b; return a; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { a -= b; return a; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { a *= s; return a; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch in *");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx* ci = &c(i, 0);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* bk = &b(k, 0);
            for (std::size_t j = 0; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
    return c;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return c;
}

bool approxEqual(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (!a.sameShape(b)) return false;
    double scale = std::max({a.maxAbs(), b.maxAbs(), 1.0});
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (std::abs(a(i, j) - b(i, j)) > tol * scale) return false;
    return true;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double relTol) : m_(m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("HermitianMatrix: not square");
    double scale = std::max(m.maxAbs(), 1.0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j) {
            if (std::abs(m(i, j) - std::conj(m(j, i))) > relTol * scale)
                throw std::invalid_argument("HermitianMatrix: entry (" + std::to_string(i) +
                                            "," + std::to_string(j) + ") breaks Hermitian symmetry");
        }
    // Symmetrise exactly so downstream code can rely on it bit-wise.
    for (std::size_t i = 0; i < m.rows(); ++i) {
        m_(i, i) = cplx(m(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < m.cols(); ++j) {
            cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = avg;
            m_(j, i) = std::conj(avg);
        }
    }
}

TraceWeights::TraceWeights(std::vector<double> w) : w_(std::move(w)) {
    for (double x : w_)
        if (x < 0) throw std::invalid_argument("TraceWeights: negative weight");
}

TraceWeights TraceWeights::ones(std::size_t n) {
    return TraceWeights(std::vector<double>(n, 1.0));
}

double TraceWeights::total() const {
    double s = 0;
    for (double x : w_) s += x;
    return s;
}

cplx traceTau(const ComplexMatrix& x, const TraceWeights& w) {
    if (x.rows() != x.cols() || x.rows() != w.size())
        throw std::invalid_argument("traceTau: dimension mismatch");
    cplx s = 0;
    for (std::size_t i = 0; i < x.rows(); ++i) s += w[i] * x(i, i);
    return s;
}

cplx traceTauProduct(const ComplexMatrix& a, const ComplexMatrix& b, const TraceWeights& w) {
    if (a.cols() != b.rows() || b.cols() != a.rows() || a.rows() != w.size())
        throw std::invalid_argument("traceTauProduct: dimension mismatch");
    cplx s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double wi = w[i];
        if (wi == 0.0) continue;
        cplx row = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            row += aij * b(j, i);
        }
        s += wi * row;
    }
    return s;
}

double traceNorm(const ComplexMatrix& x, const TraceWeights& w) {
    if (x.rows() != x.cols()) throw std::invalid_argument("traceNorm: not square");
    // |X| = V diag(sqrt(sigma)) V* with X*X = V diag(sigma) V*.
    ComplexMatrix xtx = x.adjoint() * x;
    EigenDecomposition ed = eigh(HermitianMatrix(xtx, 1e-9));
    double s = 0;
    const std::size_t n = x.rows();
    for (std::size_t k = 0; k < n; ++k) {
        double sv = std::sqrt(std::max(0.0, ed.eigenvalues[k]));
        if (sv == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * sv * std::norm(ed.eigenvectors(i, k));
    }
    return s;
}

double ComplexMatrix::norm2() const {
    if (rows_ == 0) return 0.0;
    ComplexMatrix xtx = adjoint() * (*this);
    auto ev = eighValues(HermitianMatrix(xtx, 1e-9));
    return std::sqrt(std::max(0.0, ev.back()));
}

} // namespace sflow
