#include "sflow/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace sflow {

namespace {

// QUADPACK 15-point Kronrod / 7-point Gauss pair.
constexpr double xgk[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
constexpr double wgk[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
constexpr double wg[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct Panel {
    double lo, hi;
    cplx gk;
    double err;
};

Panel evalPanel(const std::function<cplx(double)>& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
    cplx gk = 0, g = 0;
    for (int i = 0; i < 8; ++i) {
        const double x = h * xgk[i];
        cplx fv = f(c + x);
        if (xgk[i] != 0.0) fv += f(c - x);
        gk += wgk[i] * fv;
        if (i % 2 == 1) g += wg[i / 2] * fv;
    }
    gk *= h;
    g *= h;
    return {lo, hi, gk, std::abs(gk - g)};
}

} // namespace

QuadResult quadInterval(const std::function<cplx(double)>& f, double lo, double hi,
                        double relTol, double absTol, int maxSubdiv) {
    if (hi <= lo) return {cplx(0.0), 0.0};
    std::vector<Panel> done;
    std::vector<Panel> work{evalPanel(f, lo, hi)};
    int evals = 1;
    while (!work.empty()) {
        // Deterministic order: always refine the panel with the largest error.
        std::size_t worst = 0;
        for (std::size_t i = 1; i < work.size(); ++i)
            if (work[i].err > work[worst].err ||
                (work[i].err == work[worst].err && work[i].lo < work[worst].lo))
                worst = i;
        cplx total = 0;
        double errTotal = 0;
        for (const auto& p : done) { total += p.gk; errTotal += p.err; }
        for (const auto& p : work) { total += p.gk; errTotal += p.err; }
        if (errTotal <= std::max(absTol, relTol * std::abs(total))) {
            return {total, errTotal};
        }
        if (evals >= maxSubdiv) {
            return {total, errTotal};
        }
        Panel p = work[worst];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(worst));
        const double mid = 0.5 * (p.lo + p.hi);
        Panel a = evalPanel(f, p.lo, mid);
        Panel b = evalPanel(f, mid, p.hi);
        evals += 2;
        // Converged panels move out of the work set.
        const double panelFloor = 1e-300;
        if (a.err <= panelFloor) done.push_back(a); else work.push_back(a);
        if (b.err <= panelFloor) done.push_back(b); else work.push_back(b);
    }
    cplx total = 0;
    double errTotal = 0;
    for (const auto& p : done) { total += p.gk; errTotal += p.err; }
    return {total, errTotal};
}

QuadResult quadVerticalLine(const std::function<cplx(cplx)>& f, const ContourSpec& spec,
                            double decay) {
    if (!(spec.a > 0.0 && spec.a < 0.5)) throw std::invalid_argument("ContourSpec: need 0 < a < 1/2");
    if (!(spec.vMax > 0.0)) throw std::invalid_argument("ContourSpec: need vMax > 0");

    auto g = [&](double v) { return f(cplx(spec.a, v)); };
    QuadResult line = quadInterval(g, -spec.vMax, spec.vMax, spec.relTol, spec.absTol * 2.0 * M_PI,
                                   spec.maxSubdiv);

    double tail = 0.0;
    if (decay > 1.0) {
        const double cTop = std::abs(g(spec.vMax)), cBot = std::abs(g(-spec.vMax));
        const double C = std::max(cTop, cBot) * std::pow(spec.vMax, decay);
        tail = 2.0 * C * std::pow(spec.vMax, 1.0 - decay) / (decay - 1.0);
    } else {
        throw std::invalid_argument("quadVerticalLine: decay exponent must exceed 1");
    }

    // Orientation: the line is traversed downward so residues to the right of
    // l are picked up with positive sign; equivalently -(1/2pi) Int f(a+iv) dv.
    QuadResult out;
    out.value = -line.value / (2.0 * M_PI);
    out.errorEstimate = (line.errorEstimate + tail) / (2.0 * M_PI);

    if (tail / (2.0 * M_PI) > std::max(spec.absTol, spec.relTol * std::abs(out.value))) {
        const double needed =
            spec.vMax * std::pow(tail / std::max(spec.relTol * std::abs(out.value), 1e-300),
                                 1.0 / (decay - 1.0));
        throw std::runtime_error("quadVerticalLine: line truncation too small, suggest vMax >= " +
                                 std::to_string(needed));
    }
    return out;
}

QuadResult quadHalfLine(const std::function<cplx(double)>& g,
                        const std::function<double(double)>& tail,
                        double relTol, double absTol, int maxSubdiv) {
    double S = 1.0;
    cplx partial = 0;
    double err = 0;
    double lo = 0.0;
    // Grow [0, S) in doubling segments until the majorant clears the target.
    for (int iter = 0; iter < 64; ++iter) {
        QuadResult seg = quadInterval(g, lo, S, relTol, absTol, maxSubdiv);
        partial += seg.value;
        err += seg.errorEstimate;
        const double t = tail(S);
        if (t <= std::max(absTol, relTol * std::abs(partial)))
            return {partial, err + t};
        lo = S;
        S *= 2.0;
    }
    throw std::runtime_error("quadHalfLine: tail majorant never fell below tolerance");
}

} // namespace sflow
