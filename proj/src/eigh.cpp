#include "sflow/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sflow {

namespace {

// Union-find over basis indices joined by structurally nonzero off-diagonals.
std::vector<std::vector<std::size_t>> sparsityComponents(const ComplexMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) { parent[a] = parent[parent[a]]; a = parent[a]; }
        return a;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != cplx(0.0, 0.0)) {
                std::size_t a = find(i), b = find(j);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<std::size_t>> comps(n);
    for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
    comps.erase(std::remove_if(comps.begin(), comps.end(),
                               [](const auto& c) { return c.empty(); }),
                comps.end());
    return comps;
}

struct JacobiResult {
    std::vector<double> values;
    ComplexMatrix vectors;
};

// Dense cyclic Jacobi on one Hermitian block. Sweeps over (p,q), p<q in
// row-major order until the off-diagonal mass is negligible.
JacobiResult jacobiDense(ComplexMatrix a) {
    const std::size_t n = a.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    if (n == 1) return {{a(0, 0).real()}, v};

    double scale = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0) return {std::vector<double>(n, 0.0), v};

    const double tol = 1e-15 * scale;
    const int maxSweeps = 60;
    bool converged = false;
    for (int sweep = 0; sweep < maxSweeps && !converged; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= tol * std::sqrt(double(n))) {
            converged = true;
            break;
        }

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                if (std::abs(apq) <= tol) continue;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                // Diagonalise [[app, apq], [conj(apq), aqq]].
                const double absH = std::abs(apq);
                const cplx phase = apq / absH;
                const double theta = (aqq - app) / (2.0 * absH);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Rotation J: J_pp=c, J_pq=s*phase, J_qp=-s*conj(phase), J_qq=c;
                // apply a <- J^H a J, v <- v J.
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * std::conj(phase) * akq;
                    a(k, q) = s * phase * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * std::conj(phase) * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * std::conj(phase) * vkq;
                    v(k, q) = s * phase * vkp + c * vkq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    if (!converged) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) > tol * std::sqrt(double(n)))
            throw std::runtime_error("eigh: Jacobi failed to converge after " +
                                     std::to_string(maxSweeps) + " sweeps");
    }
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i) vals[i] = a(i, i).real();
    return {vals, v};
}

struct BlockEig {
    std::vector<std::vector<std::size_t>> comps; // global indices per block
    std::vector<JacobiResult> blocks;
    std::size_t dim;
};

BlockEig blockEig(const HermitianMatrix& h) {
    const ComplexMatrix& m = h.matrix();
    BlockEig be;
    be.dim = h.dim();
    be.comps = sparsityComponents(m);
    be.blocks.reserve(be.comps.size());
    for (const auto& comp : be.comps) {
        ComplexMatrix sub(comp.size(), comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t j = 0; j < comp.size(); ++j) sub(i, j) = m(comp[i], comp[j]);
        be.blocks.push_back(jacobiDense(std::move(sub)));
    }
    return be;
}

} // namespace

EigenDecomposition eigh(const HermitianMatrix& h) {
    BlockEig be = blockEig(h);
    const std::size_t n = be.dim;

    // Stable ascending sort of (value, block, slot) keeps output deterministic.
    struct Entry { double val; std::size_t blk, slot; };
    std::vector<Entry> entries;
    entries.reserve(n);
    for (std::size_t b = 0; b < be.blocks.size(); ++b)
        for (std::size_t s = 0; s < be.blocks[b].values.size(); ++s)
            entries.push_back({be.blocks[b].values[s], b, s});
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.val < b.val; });

    EigenDecomposition ed;
    ed.eigenvalues.resize(n);
    ed.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const Entry& e = entries[col];
        ed.eigenvalues[col] = e.val;
        const auto& comp = be.comps[e.blk];
        const auto& vec = be.blocks[e.blk].vectors;
        for (std::size_t i = 0; i < comp.size(); ++i)
            ed.eigenvectors(comp[i], col) = vec(i, e.slot);
    }
    return ed;
}

std::vector<double> eighValues(const HermitianMatrix& h) {
    BlockEig be = blockEig(h);
    std::vector<double> vals;
    vals.reserve(be.dim);
    for (const auto& b : be.blocks) vals.insert(vals.end(), b.values.begin(), b.values.end());
    std::sort(vals.begin(), vals.end());
    return vals;
}

ComplexMatrix funcCalc(const HermitianMatrix& h, const std::function<cplx(double)>& f) {
    BlockEig be = blockEig(h);
    ComplexMatrix out(be.dim, be.dim);
    for (std::size_t b = 0; b < be.blocks.size(); ++b) {
        const auto& comp = be.comps[b];
        const auto& blk = be.blocks[b];
        const std::size_t k = comp.size();
        std::vector<cplx> fv(k);
        for (std::size_t s = 0; s < k; ++s) {
            fv[s] = f(blk.values[s]);
            if (!std::isfinite(fv[s].real()) || !std::isfinite(fv[s].imag()))
                throw std::domain_error("funcCalc: f undefined at eigenvalue " +
                                        std::to_string(blk.values[s]));
        }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                cplx s = 0;
                for (std::size_t t = 0; t < k; ++t)
                    s += blk.vectors(i, t) * fv[t] * std::conj(blk.vectors(j, t));
                out(comp[i], comp[j]) = s;
            }
    }
    return out;
}

cplx funcCalcTrace(const HermitianMatrix& h, const std::function<cplx(double)>& f,
                   const ComplexMatrix& left, const TraceWeights& w) {
    if (left.rows() != h.dim() || left.cols() != h.dim() || w.size() != h.dim())
        throw std::invalid_argument("funcCalcTrace: dimension mismatch");
    BlockEig be = blockEig(h);
    cplx total = 0;
    for (std::size_t b = 0; b < be.blocks.size(); ++b) {
        const auto& comp = be.comps[b];
        const auto& blk = be.blocks[b];
        const std::size_t k = comp.size();
        std::vector<cplx> fv(k);
        for (std::size_t s = 0; s < k; ++s) {
            fv[s] = f(blk.values[s]);
            if (!std::isfinite(fv[s].real()) || !std::isfinite(fv[s].imag()))
                throw std::domain_error("funcCalcTrace: f undefined at eigenvalue " +
                                        std::to_string(blk.values[s]));
        }
        // sum_{i,j in comp} w_i L_ij f(H)_ji, f(H)_ji = sum_t V_jt fv_t conj(V_it)
        for (std::size_t j = 0; j < k; ++j) {
            for (std::size_t i = 0; i < k; ++i) {
                const double wi = w[comp[i]];
                if (wi == 0.0) continue;
                const cplx lij = left(comp[i], comp[j]);
                if (lij == cplx(0.0, 0.0)) continue;
                cplx fji = 0;
                for (std::size_t t = 0; t < k; ++t)
                    fji += blk.vectors(j, t) * fv[t] * std::conj(blk.vectors(i, t));
                total += wi * lij * fji;
            }
        }
    }
    return total;
}

} // namespace sflow
