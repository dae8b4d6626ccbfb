#include "sflow/triples.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

namespace sflow {

namespace {

ComplexMatrix sigma1() {
    ComplexMatrix s(2, 2);
    s(0, 1) = 1.0;
    s(1, 0) = 1.0;
    return s;
}

ComplexMatrix sigma2() {
    ComplexMatrix s(2, 2);
    s(0, 1) = cplx(0.0, -1.0);
    s(1, 0) = cplx(0.0, 1.0);
    return s;
}

ComplexMatrix sigma3() {
    ComplexMatrix s(2, 2);
    s(0, 0) = 1.0;
    s(1, 1) = -1.0;
    return s;
}

} // namespace

const ComplexMatrix& SpectralTripleRep::gen(const std::string& name) const {
    auto it = gens.find(name);
    if (it == gens.end())
        throw std::invalid_argument("SpectralTripleRep: no generator named '" + name + "'");
    return it->second;
}

void SpectralTripleRep::validate() const {
    if (weights.size() != dim())
        throw std::invalid_argument("SpectralTripleRep: weight length mismatch");
    // [W, D] = 0: W diagonal, so w_i != w_j forces D_ij = 0.
    const ComplexMatrix& d = D.matrix();
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (std::abs(weights[i] - weights[j]) > 0 &&
                std::abs(d(i, j)) > 1e-12 * std::max(1.0, d.maxAbs()))
                throw std::invalid_argument("SpectralTripleRep: [W, D] != 0");
}

SpectralTripleRep circleTriple(int cutoff, TruncationMode mode) {
    if (cutoff < 1) throw std::invalid_argument("circleTriple: cutoff must be >= 1");
    const std::size_t n = 2 * static_cast<std::size_t>(cutoff) + 1;
    std::vector<double> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = static_cast<double>(i) - cutoff;

    ComplexMatrix u(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) u(i + 1, i) = 1.0; // e_m -> e_{m+1}
    if (mode == TruncationMode::circulant) u(0, n - 1) = 1.0;

    SpectralTripleRep t;
    t.D = HermitianMatrix(ComplexMatrix::diagonal(diag));
    t.gens.emplace("u", std::move(u));
    t.weights = TraceWeights::ones(n);
    t.p = 1.0;
    t.truncationMode = mode;
    t.label = std::string("circle-N") + std::to_string(cutoff) +
              (mode == TruncationMode::plain ? "-plain" : "-circulant");
    return t;
}

ComplexMatrix circlePower(const SpectralTripleRep& t, int w) {
    const ComplexMatrix& u = t.gen("u");
    if (w == 0) return ComplexMatrix::identity(t.dim());
    ComplexMatrix base = w > 0 ? u : u.adjoint();
    ComplexMatrix acc = base;
    for (int i = 1; i < std::abs(w); ++i) acc = acc * base;
    return acc;
}

SpectralTripleRep weightedSumTriple(const SpectralTripleRep& t1, const SpectralTripleRep& t2,
                                    double w1, double w2) {
    for (const auto& [name, g] : t1.gens)
        if (!t2.gens.count(name))
            throw std::invalid_argument("weightedSumTriple: generator '" + name +
                                        "' missing in second triple");
    for (const auto& [name, g] : t2.gens)
        if (!t1.gens.count(name))
            throw std::invalid_argument("weightedSumTriple: generator '" + name +
                                        "' missing in first triple");

    const std::size_t n1 = t1.dim(), n2 = t2.dim();
    auto embed = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
        ComplexMatrix m(n1 + n2, n1 + n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j) m(n1 + i, n1 + j) = b(i, j);
        return m;
    };

    SpectralTripleRep t;
    t.D = HermitianMatrix(embed(t1.D.matrix(), t2.D.matrix()));
    for (const auto& [name, g] : t1.gens) t.gens.emplace(name, embed(g, t2.gen(name)));
    std::vector<double> w(n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) w[i] = w1 * t1.weights[i];
    for (std::size_t i = 0; i < n2; ++i) w[n1 + i] = w2 * t2.weights[i];
    t.weights = TraceWeights(std::move(w));
    t.p = std::max(t1.p, t2.p);
    t.truncationMode = t1.truncationMode;
    t.label = t1.label + "+" + t2.label;
    return t;
}

cplx DoubledTriple::supertrace(const ComplexMatrix& x) const {
    return 0.5 * traceTauProduct(gamma.matrix(), x, weights4);
}

DoubledTriple doubleUp(const SpectralTripleRep& t, const std::string& uName) {
    return doubleUp(t, t.gen(uName));
}

DoubledTriple doubleUp(const SpectralTripleRep& t, const ComplexMatrix& u) {
    const std::size_t n = t.dim();
    ComplexMatrix uerr = u.adjoint() * u - ComplexMatrix::identity(n);
    ComplexMatrix uerr2 = u * u.adjoint() - ComplexMatrix::identity(n);
    if (uerr.maxAbs() > 1e-10 || uerr2.maxAbs() > 1e-10)
        throw std::invalid_argument("doubleUp: generator is not unitary");

    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    const ComplexMatrix idn = ComplexMatrix::identity(n);
    const ComplexMatrix uStar = u.adjoint();

    DoubledTriple dt;
    dt.Dt = HermitianMatrix(kron(sigma2(), kron(id2, t.D.matrix())));
    // q = s3 (x) [[0, -i u*], [i u, 0]]
    ComplexMatrix qInner(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            qInner(i, n + j) = cplx(0.0, -1.0) * uStar(i, j);
            qInner(n + i, j) = cplx(0.0, 1.0) * u(i, j);
        }
    dt.q = HermitianMatrix(kron(sigma3(), qInner));
    dt.gamma = HermitianMatrix(kron(sigma2(), kron(sigma3(), idn)));
    dt.rho = HermitianMatrix(kron(sigma2(), kron(id2, idn)));

    // {Dt, q}, computed directly and cross-checked against the block formula
    // s1 (x) [[0, [D,u*]], [-[D,u], 0]].
    dt.anti = anticommutator(dt.Dt.matrix(), dt.q.matrix());
    ComplexMatrix cu = commutator(t.D.matrix(), u);
    ComplexMatrix cuStar = commutator(t.D.matrix(), uStar);
    ComplexMatrix antiInner(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            antiInner(i, n + j) = cuStar(i, j);
            antiInner(n + i, j) = -cu(i, j);
        }
    ComplexMatrix antiBlock = kron(sigma1(), antiInner);
    if (!approxEqual(dt.anti, antiBlock, 1e-10))
        throw std::runtime_error("doubleUp: anticommutator disagrees with block formula");

    std::vector<double> w4(4 * n);
    for (std::size_t c = 0; c < 4; ++c)
        for (std::size_t i = 0; i < n; ++i) w4[c * n + i] = t.weights[i];
    dt.weights4 = TraceWeights(std::move(w4));
    dt.p = t.p;
    return dt;
}

ComplexMatrix iteratedComm(const SpectralTripleRep& t, const ComplexMatrix& T, unsigned n) {
    ComplexMatrix d2 = t.D.matrix() * t.D.matrix();
    ComplexMatrix out = T;
    for (unsigned i = 0; i < n; ++i) out = commutator(d2, out);
    return out;
}

double tailBoundBIGFor(const HermitianMatrix& D, const TraceWeights& w, double normA,
                       double pEff, double rRe, double eps, double s) {
    if (normA >= std::sqrt(2.0))
        throw std::invalid_argument("tailBoundBIG: requires ||A|| < sqrt(2)");
    if (rRe <= 0.0) throw std::invalid_argument("tailBoundBIG: requires Re r > 0");
    if (eps <= 0.0 || eps >= 1.0) throw std::invalid_argument("tailBoundBIG: need 0 < eps < 1");

    const double expo = pEff / 2.0 + eps;
    // (1/2+D^2)^{-(p/2+eps)} is positive, so its weighted trace norm is the
    // weighted trace itself.
    cplx tn = funcCalcTrace(D, [&](double x) { return std::pow(0.5 + x * x, -expo); },
                            ComplexMatrix::identity(D.dim()), w);
    const double cPE = tn.real();
    return cPE * std::pow(0.5 + s * s - s * normA, -rRe + eps);
}

double tailBoundBIG(const SpectralTripleRep& t, double normA, double pEff, double rRe,
                    double eps, double s) {
    return tailBoundBIGFor(t.D, t.weights, normA, pEff, rRe, eps, s);
}

std::string SpectralTripleRep::toJson() const {
    nlohmann::json j;
    j["label"] = label;
    j["dimension"] = dim();
    j["p"] = p;
    j["truncationMode"] = truncationMode == TruncationMode::plain ? "plain" : "circulant";
    j["weights"] = weights.values();

    bool dDiag = true;
    const ComplexMatrix& d = D.matrix();
    for (std::size_t i = 0; i < dim() && dDiag; ++i)
        for (std::size_t jj = 0; jj < dim(); ++jj)
            if (i != jj && d(i, jj) != cplx(0.0, 0.0)) { dDiag = false; break; }
    if (dDiag) {
        std::vector<double> diag(dim());
        for (std::size_t i = 0; i < dim(); ++i) diag[i] = d(i, i).real();
        j["D"] = {{"kind", "diagonal"}, {"values", diag}};
    } else {
        std::vector<std::vector<double>> re(dim()), im(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t jj = 0; jj < dim(); ++jj) {
                re[i].push_back(d(i, jj).real());
                im[i].push_back(d(i, jj).imag());
            }
        j["D"] = {{"kind", "dense"}, {"re", re}, {"im", im}};
    }

    nlohmann::json jg;
    for (const auto& [name, g] : gens) {
        std::vector<std::vector<double>> re(g.rows()), im(g.rows());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t jj = 0; jj < g.cols(); ++jj) {
                re[i].push_back(g(i, jj).real());
                im[i].push_back(g(i, jj).imag());
            }
        jg[name] = {{"re", re}, {"im", im}};
    }
    j["generators"] = jg;
    return j.dump(2);
}

SpectralTripleRep SpectralTripleRep::fromJson(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    SpectralTripleRep t;
    t.label = j.value("label", "");
    t.p = j.value("p", 1.0);
    t.truncationMode =
        j.value("truncationMode", "plain") == std::string("circulant") ? TruncationMode::circulant
                                                                       : TruncationMode::plain;
    const std::size_t n = j.at("dimension").get<std::size_t>();

    const auto& jd = j.at("D");
    if (jd.at("kind") == "diagonal") {
        std::vector<double> diag = jd.at("values").get<std::vector<double>>();
        if (diag.size() != n) throw std::invalid_argument("triple JSON: D size mismatch");
        t.D = HermitianMatrix(ComplexMatrix::diagonal(diag));
    } else {
        ComplexMatrix d(n, n);
        auto re = jd.at("re").get<std::vector<std::vector<double>>>();
        auto im = jd.at("im").get<std::vector<std::vector<double>>>();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t jj = 0; jj < n; ++jj) d(i, jj) = cplx(re[i][jj], im[i][jj]);
        t.D = HermitianMatrix(d, 1e-9);
    }

    t.weights = TraceWeights(j.at("weights").get<std::vector<double>>());
    for (auto it = j.at("generators").begin(); it != j.at("generators").end(); ++it) {
        auto re = it.value().at("re").get<std::vector<std::vector<double>>>();
        auto im = it.value().at("im").get<std::vector<std::vector<double>>>();
        ComplexMatrix g(re.size(), re.empty() ? 0 : re[0].size());
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t jj = 0; jj < g.cols(); ++jj) g(i, jj) = cplx(re[i][jj], im[i][jj]);
        t.gens.emplace(it.key(), std::move(g));
    }
    t.validate();
    return t;
}

} // namespace sflow
