#include <doctest.h>

#include "sflow/triples.hpp"

#include <cmath>

using namespace sflow;

TEST_CASE("circleTriple: construction at N=1") {
    SpectralTripleRep t = circleTriple(1);
    REQUIRE(t.dim() == 3);
    CHECK(t.D(0, 0).real() == doctest::Approx(-1.0));
    CHECK(t.D(1, 1).real() == doctest::Approx(0.0));
    CHECK(t.D(2, 2).real() == doctest::Approx(1.0));
    const ComplexMatrix& u = t.gen("u");
    // plain: u e0 = e1, u e2 = 0
    CHECK(u(1, 0) == cplx(1.0));
    CHECK(u(2, 1) == cplx(1.0));
    for (std::size_t i = 0; i < 3; ++i) CHECK(u(i, 2) == cplx(0.0));
}

TEST_CASE("circleTriple: circulant shift is unitary with u^3 = I at N=1") {
    SpectralTripleRep t = circleTriple(1, TruncationMode::circulant);
    const ComplexMatrix& u = t.gen("u");
    CHECK((u.adjoint() * u - ComplexMatrix::identity(3)).maxAbs() <= 1e-14);
    ComplexMatrix u3 = u * u * u;
    CHECK((u3 - ComplexMatrix::identity(3)).maxAbs() <= 1e-14);
}

TEST_CASE("circle: [D,u] = u on interior (plain truncation)") {
    SpectralTripleRep t = circleTriple(5);
    ComplexMatrix c = commutator(t.D.matrix(), t.gen("u"));
    // Both [D,u] and u vanish on the edge column, so equality holds everywhere.
    CHECK(approxEqual(c, t.gen("u"), 1e-14));
}

TEST_CASE("weightedSumTriple: weighted dimension and zero-weight block") {
    SpectralTripleRep c = circleTriple(2);
    SpectralTripleRep t = weightedSumTriple(c, c, 1.0, 0.5);
    CHECK(traceTau(ComplexMatrix::identity(t.dim()), t.weights).real() ==
          doctest::Approx(1.5 * 5));

    SpectralTripleRep t0 = weightedSumTriple(c, c, 1.0, 0.0);
    ComplexMatrix x(t0.dim(), t0.dim());
    for (std::size_t i = 5; i < 10; ++i) x(i, i) = 7.0; // supported on block 2
    CHECK(std::abs(traceTau(x, t0.weights)) == doctest::Approx(0.0));
}

TEST_CASE("doubleUp: algebraic relations of the doubled package") {
    SpectralTripleRep t = circleTriple(3, TruncationMode::circulant);
    DoubledTriple dt = doubleUp(t, "u");
    const std::size_t n4 = dt.dim();
    ComplexMatrix id = ComplexMatrix::identity(n4);

    CHECK((dt.q.matrix() * dt.q.matrix() - id).maxAbs() <= 1e-12);
    CHECK((dt.gamma.matrix() * dt.gamma.matrix() - id).maxAbs() <= 1e-12);
    CHECK((dt.rho.matrix() * dt.rho.matrix() - id).maxAbs() <= 1e-12);
    CHECK(commutator(dt.gamma.matrix(), dt.q.matrix()).maxAbs() <= 1e-12);
    CHECK(commutator(dt.gamma.matrix(), dt.Dt.matrix()).maxAbs() <= 1e-12);
    CHECK(commutator(dt.rho.matrix(), dt.gamma.matrix()).maxAbs() <= 1e-12);
    CHECK(anticommutator(dt.rho.matrix(), dt.q.matrix()).maxAbs() <= 1e-12);

    // q eigenvalues all +-1
    auto ev = eighValues(dt.q);
    for (double v : ev) CHECK(std::abs(std::abs(v) - 1.0) <= 1e-12);
}

TEST_CASE("doubleUp: u = I gives vanishing anticommutator") {
    SpectralTripleRep t = circleTriple(2);
    DoubledTriple dt = doubleUp(t, ComplexMatrix::identity(t.dim()));
    CHECK(dt.anti.maxAbs() <= 1e-14);
}

TEST_CASE("doubleUp: anti norm matches ||[D,u]|| for the circulant shift") {
    SpectralTripleRep t = circleTriple(2, TruncationMode::circulant);
    DoubledTriple dt = doubleUp(t, "u");
    double lhs = dt.anti.norm2();
    double rhs = commutator(t.D.matrix(), t.gen("u")).norm2();
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
}

TEST_CASE("doubleUp rejects non-unitary generators") {
    SpectralTripleRep t = circleTriple(2); // plain shift is not unitary
    CHECK_THROWS_AS(doubleUp(t, "u"), std::invalid_argument);
}

TEST_CASE("iteratedComm: basic identities") {
    SpectralTripleRep t = circleTriple(3);
    ComplexMatrix T(t.dim(), t.dim());
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) T(i, j) = cplx(double(i + j), double(i) - j);
    CHECK(approxEqual(iteratedComm(t, T, 0), T, 1e-15));

    // diagonal D: first commutator scales entries by (d_i^2 - d_j^2)
    ComplexMatrix c1 = iteratedComm(t, T, 1);
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) {
            double di = t.D(i, i).real(), dj = t.D(j, j).real();
            CHECK(std::abs(c1(i, j) - (di * di - dj * dj) * T(i, j)) <= 1e-12);
        }

    // commuting T: all iterated commutators vanish
    ComplexMatrix comm = funcCalc(t.D, [](double x) { return cplx(std::cos(x), 0.0); });
    for (unsigned n = 1; n <= 3; ++n) CHECK(iteratedComm(t, comm, n).maxAbs() <= 1e-12);
}

TEST_CASE("tailBoundBIG: plug-in values and domination") {
    SpectralTripleRep t = circleTriple(32);
    const double pEff = 1.0, eps = 0.05;

    // s=0, normA=0: C_{p+eps} * 2^{rRe-eps}
    double rRe = 1.0;
    double expo = pEff / 2.0 + eps;
    double cpe = 0.0;
    for (int n = -32; n <= 32; ++n) cpe += std::pow(0.5 + n * n, -expo);
    double bound = tailBoundBIG(t, 0.0, pEff, rRe, eps, 0.0);
    CHECK(bound == doctest::Approx(cpe * std::pow(2.0, rRe - eps)).epsilon(1e-10));

    // decay for large s: ratio of bounds at s and 2s approaches 2^{-2(rRe-eps)}
    double b1 = tailBoundBIG(t, 0.0, pEff, rRe, eps, 1e4);
    double b2 = tailBoundBIG(t, 0.0, pEff, rRe, eps, 2e4);
    CHECK(b2 / b1 == doctest::Approx(std::pow(4.0, -(rRe - eps))).epsilon(1e-3));

    // Lemma bound dominates the true weighted trace norm on an (s, r) grid.
    for (double s : {0.0, 0.5, 1.0, 2.0, 10.0}) {
        for (double r : {0.6, 1.0, 1.5, 2.5}) {
            double lhs = 0.0;
            for (int n = -32; n <= 32; ++n)
                lhs += std::pow(1.0 + n * n + s * s, -pEff / 2.0 - r);
            double rhs = tailBoundBIG(t, 0.0, pEff, r, eps, s);
            CHECK(lhs < rhs);
        }
    }

    CHECK_THROWS_AS(tailBoundBIG(t, 1.5, pEff, 1.0, eps, 1.0), std::invalid_argument);
}

TEST_CASE("tailBoundBIG dominates with a genuine perturbation present") {
    // circle N=32, pEff=1, rRe=1, eps=0.05, s=10 with A != 0 on the doubled
    // space: bound >= ||(1+Dt^2+s^2+s{Dt,q})^{-p/2-r}||_1.
    SpectralTripleRep t = circleTriple(32, TruncationMode::circulant);
    DoubledTriple dt = doubleUp(t, "u");
    const double normA = dt.anti.norm2();
    REQUIRE(normA < std::sqrt(2.0)); // winding 1: ||[D,u]|| = 1
    const double pEff = 1.0, r = 1.0, eps = 0.05, s = 10.0;

    ComplexMatrix m = dt.anti;
    m *= s;
    ComplexMatrix d2 = dt.Dt.matrix() * dt.Dt.matrix();
    m += d2;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 1.0 + s * s;
    double actual = 0.0;
    for (double ev : eighValues(HermitianMatrix(m, 1e-9)))
        actual += std::pow(ev, -pEff / 2.0 - r);

    double bound = tailBoundBIGFor(dt.Dt, dt.weights4, normA, pEff, r, eps, s);
    CHECK(actual < bound);
}

TEST_CASE("triple JSON round trip") {
    SpectralTripleRep t = circleTriple(2, TruncationMode::circulant);
    std::string js = t.toJson();
    SpectralTripleRep back = SpectralTripleRep::fromJson(js);
    CHECK(back.dim() == t.dim());
    CHECK(back.p == doctest::Approx(t.p));
    CHECK(approxEqual(back.D.matrix(), t.D.matrix(), 1e-14));
    CHECK(approxEqual(back.gen("u"), t.gen("u"), 1e-14));
    CHECK(back.truncationMode == TruncationMode::circulant);
}
