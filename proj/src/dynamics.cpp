#include "paramplane/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "paramplane/errors.hpp"

namespace paramplane {

EscapeConfig::EscapeConfig(double esc, int max_iter, double target_tol)
    : esc_(esc), max_iter_(max_iter), target_tol_(target_tol) {
    if (!(esc > 1.0) || !std::isfinite(esc)) throw ValidationError("esc must be a finite value above 1");
    if (max_iter < 1) throw ValidationError("max_iter must be positive");
    if (!(target_tol > 0.0)) throw ValidationError("target tolerance must be positive");
}

namespace {

Complex ipow(Complex z, int n) noexcept {
    Complex r{1.0};
    for (; n > 0; n >>= 1) {
        if (n & 1) r *= z;
        z *= z;
    }
    return r;
}

} // namespace

const char* to_string(OrbitKind k) {
    switch (k) {
    case OrbitKind::ToZero: return "to_zero";
    case OrbitKind::ToInfinity: return "to_infinity";
    case OrbitKind::ToTarget: return "to_target";
    case OrbitKind::NonConverged: return "non_converged";
    }
    return "?";
}

OrbitOutcome classify_orbit(const NewtonLikeOperator& op, Complex z0, const EscapeConfig& cfg,
                            std::span<const Target> targets) {
    // The orbit is carried as u with |u| <= 1 plus a flag saying whether the
    // actual point is 1/u. Orbits of z and 1/z then perform identical
    // arithmetic, and |z| < eps, |z| > esc both become |u| < eps.
    const double eps2 = cfg.eps() * cfg.eps();
    bool inverted = false;
    Complex u = z0;
    if (is_infinite(z0)) {
        u = 0.0;
        inverted = true;
    } else if (std::norm(z0) > 1.0) {
        u = 1.0 / z0;
        inverted = true;
    }
    const auto& d = op.den().coeffs();
    const std::size_t k = d.size() - 1;
    const int n = op.n();
    for (int i = 0; i < cfg.max_iter(); ++i) {
        if (!std::isfinite(u.real()) || !std::isfinite(u.imag())) return {OrbitKind::ToInfinity, i};
        if (std::norm(u) < eps2) return {inverted ? OrbitKind::ToInfinity : OrbitKind::ToZero, i};
        if (!targets.empty()) {
            const Complex z = inverted ? 1.0 / u : u;
            for (std::size_t t = 0; t < targets.size(); ++t) {
                if (std::abs(z - targets[t].point) < targets[t].tol) {
                    return {OrbitKind::ToTarget, i, static_cast<int>(t)};
                }
            }
        }
        // O(u) = P/Q with P = u^n num(u), Q = den(u); num is den reversed, so
        // one pass gives both. Taking P/Q or Q/P keeps the state in the disk.
        Complex p{0.0}, q{0.0};
        for (std::size_t j = 0; j <= k; ++j) {
            p = p * u + d[j];
            q = q * u + d[k - j];
        }
        p *= ipow(u, n);
        if (std::norm(p) > std::norm(q)) {
            u = q / p;
            inverted = !inverted;
        } else {
            u = p / q;
        }
    }
    return {OrbitKind::NonConverged, cfg.max_iter()};
}

OrbitOutcome classify_orbit(const NewtonLikeOperator& op, Complex z0, const EscapeConfig& cfg,
                            std::span<const Complex> targets) {
    std::vector<Target> t;
    t.reserve(targets.size());
    for (const Complex& p : targets) t.push_back({p, cfg.target_tol()});
    return classify_orbit(op, z0, cfg, std::span<const Target>(t));
}

ConvergenceSummary slowest_convergence(std::span<const OrbitOutcome> outcomes) {
    ConvergenceSummary s;
    for (const auto& o : outcomes) {
        if (!o.to_root()) continue;
        ++s.count_converged;
        s.slowest_iters = std::max(s.slowest_iters, o.iterations);
    }
    s.all_converged = !outcomes.empty() && s.count_converged == static_cast<int>(outcomes.size());
    return s;
}

const char* to_string(CycleVerdict v) {
    switch (v) {
    case CycleVerdict::Capture: return "capture";
    case CycleVerdict::Disjoint: return "disjoint";
    case CycleVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

Complex iterate(const NewtonLikeOperator& op, Complex z, int count) {
    for (int i = 0; i < count; ++i) z = op(z);
    return z;
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

CycleVerdict same_cycle(const NewtonLikeOperator& op, Complex c1, Complex c3, const SameCycleOptions& opts) {
    Complex z1 = iterate(op, c1, opts.refine);
    Complex w1 = iterate(op, 1.0 / c1, opts.refine);
    std::vector<Complex> orbit1, orbit2;
    orbit1.reserve(opts.window);
    orbit2.reserve(opts.window);
    for (int i = 0; i < opts.window; ++i) {
        orbit1.push_back(z1);
        orbit2.push_back(w1);
        z1 = op(z1);
        w1 = op(w1);
    }
    const Complex z3 = iterate(op, c3, opts.refine);

    const auto all_finite = [](const std::vector<Complex>& v) { return std::all_of(v.begin(), v.end(), finite); };
    if (!finite(z3) || !all_finite(orbit1) || !all_finite(orbit2)) return CycleVerdict::Inconclusive;

    for (const auto* orbit : {&orbit1, &orbit2}) {
        for (const Complex& z : *orbit) {
            if (std::abs(z - z3) < opts.tol) return CycleVerdict::Capture;
        }
    }
    return CycleVerdict::Disjoint;
}

} // namespace paramplane
