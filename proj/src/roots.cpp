#include "paramplane/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "paramplane/errors.hpp"

namespace paramplane {

void sort_roots(std::vector<Complex>& roots) {
    std::sort(roots.begin(), roots.end(), [](const Complex& a, const Complex& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::pair<Complex, Complex> lift_root(Complex x) {
    const Complex s = std::sqrt(x * x - 4.0);
    // Pick the sign that adds magnitudes; the partner then comes from z1 z2 = 1.
    const Complex big = (std::norm(x + s) >= std::norm(x - s)) ? (x + s) : (x - s);
    Complex z1 = 0.5 * big;
    Complex z2 = (z1 == Complex{0.0}) ? Complex{0.0} : 1.0 / z1;

    const double m1 = std::abs(z1);
    const double m2 = std::abs(z2);
    const bool tie = std::abs(m1 - m2) <= 1e-12 * std::max(1.0, m1);
    if (tie) {
        if (z1.imag() < z2.imag()) std::swap(z1, z2);
    } else if (m1 < m2) {
        std::swap(z1, z2);
    }
    return {z1, z2};
}

std::vector<Complex> solve_quadratic(Complex a2, Complex a1, Complex a0) {
    const double scale = std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
    if (std::abs(a2) <= Polynomial::kZeroThreshold * scale || a2 == Complex{0.0}) {
        throw DegenerateLeading("quadratic leading coefficient vanishes");
    }
    const Complex disc = std::sqrt(a1 * a1 - 4.0 * a2 * a0);
    // q = -(a1 + sign * disc)/2 with the sign that avoids cancellation.
    const Complex sum = (std::real(std::conj(a1) * disc) >= 0.0) ? (a1 + disc) : (a1 - disc);
    const Complex q = -0.5 * sum;
    std::vector<Complex> roots;
    if (q == Complex{0.0}) {
        roots = {Complex{0.0}, Complex{0.0}};
    } else {
        roots = {q / a2, a0 / q};
    }
    sort_roots(roots);
    return roots;
}

namespace {

Complex principal_cbrt(Complex w) {
    if (w == Complex{0.0}) return 0.0;
    return std::polar(std::cbrt(std::abs(w)), std::arg(w) / 3.0);
}

void newton_polish(const Polynomial& p, Complex& x, int steps) {
    const Polynomial dp = poly_derivative(p);
    double best = std::abs(p(x));
    for (int i = 0; i < steps && best > 0.0; ++i) {
        const Complex d = dp(x);
        if (d == Complex{0.0}) return;
        const Complex next = x - p(x) / d;
        const double r = std::abs(p(next));
        if (!(r < best)) return;
        x = next;
        best = r;
    }
}

} // namespace

std::vector<Complex> solve_cubic(Complex a3, Complex a2, Complex a1, Complex a0) {
    const double scale = std::max({std::abs(a3), std::abs(a2), std::abs(a1), std::abs(a0)});
    if (std::abs(a3) <= Polynomial::kZeroThreshold * scale || a3 == Complex{0.0}) {
        throw DegenerateLeading("cubic leading coefficient vanishes");
    }
    const Complex b = a2 / a3;
    const Complex c = a1 / a3;
    const Complex d = a0 / a3;

    // Depressed form t^3 + pt + q with x = t - b/3.
    const Complex p = c - b * b / 3.0;
    const Complex q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    const Complex delta = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    const Complex u3a = -q / 2.0 + delta;
    const Complex u3b = -q / 2.0 - delta;
    const Complex u = principal_cbrt(std::norm(u3a) >= std::norm(u3b) ? u3a : u3b);
    const Complex v = (u == Complex{0.0}) ? Complex{0.0} : -p / (3.0 * u);

    const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    const Complex omega2 = std::conj(omega);
    std::vector<Complex> roots = {u + v, omega * u + omega2 * v, omega2 * u + omega * v};

    const Polynomial poly{a0, a1, a2, a3};
    for (auto& r : roots) {
        r -= b / 3.0;
        newton_polish(poly, r, 3);
    }
    sort_roots(roots);
    return roots;
}

std::vector<Complex> solve_poly_oracle(const Polynomial& input, const OracleOptions& opts) {
    const Polynomial p = input.trimmed();
    const std::size_t n = p.size() - 1;
    if (n == 0) throw DegenerateLeading("constant polynomial has no roots");

    const Polynomial dp = poly_derivative(p);
    const Complex lead = p.coeffs().back();
    const double maxmag = p.max_magnitude();

    // Fujiwara-style radius; roots of z^n collapse to zero.
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        radius = std::max(radius, std::pow(std::abs(p[i] / lead), 1.0 / double(n - i)));
    }
    std::vector<Complex> z(n);
    if (radius == 0.0) return std::vector<Complex>(n, Complex{0.0});
    radius *= 0.5;
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * double(k) / double(n) + 0.4;
        z[k] = std::polar(radius * (1.0 + 0.01 * double(k % 3)), angle);
    }

    constexpr double kEps = std::numeric_limits<double>::epsilon();
    std::vector<bool> settled(n, false);
    int sweep = 0;
    for (; sweep < opts.max_sweeps; ++sweep) {
        double max_step = 0.0;
        bool all_settled = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (settled[k]) continue;
            const Complex pz = p(z[k]);
            const double mag = std::abs(z[k]);
            // Residual already at rounding level: further steps are noise.
            if (std::abs(pz) <= 4.0 * double(n) * kEps * p.abs_eval(mag)) {
                settled[k] = true;
                continue;
            }
            all_settled = false;
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
            }
            const Complex dpz = dp(z[k]);
            Complex step;
            if (dpz == Complex{0.0}) {
                step = Complex{radius * 1e-3, radius * 1e-3};
            } else {
                const Complex w = pz / dpz;
                const Complex denom = 1.0 - w * repulsion;
                step = (denom == Complex{0.0}) ? w : w / denom;
            }
            z[k] -= step;
            max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[k])));
        }
        if (all_settled || max_step < opts.step_tol) break;
    }

    double worst = 0.0;
    for (const auto& r : z) {
        const double bound = maxmag * std::pow(std::max(1.0, std::abs(r)), double(n));
        worst = std::max(worst, std::abs(p(r)) / bound);
    }
    if (!(worst < opts.residual_tol)) {
        throw NoConvergence("simultaneous iteration stopped after " + std::to_string(sweep) +
                            " sweeps with relative residual " + std::to_string(worst));
    }
    sort_roots(z);
    return z;
}

std::vector<Complex> solve_poly(const Polynomial& input) {
    const Polynomial p = input.trimmed();
    switch (p.size() - 1) {
    case 0:
        throw DegenerateLeading("constant polynomial has no roots");
    case 1:
        return {-p[0] / p[1]};
    case 2:
        return solve_quadratic(p[2], p[1], p[0]);
    case 3:
        return solve_cubic(p[3], p[2], p[1], p[0]);
    default:
        return solve_poly_oracle(p);
    }
}

const char* to_string(RootClass kind) {
    switch (kind) {
    case RootClass::InverseRealPair: return "InverseRealPair";
    case RootClass::UnitCircleConjugatePair: return "UnitCircleConjugatePair";
    case RootClass::QuarticQuadruple: return "QuarticQuadruple";
    }
    return "?";
}

std::vector<RootClassification> classify_palindromic_roots(const Polynomial& input, double tol) {
    const Polynomial p = input.trimmed();
    const double maxmag = p.max_magnitude();
    for (const auto& c : p.coeffs()) {
        if (std::abs(c.imag()) > 1e-10 * maxmag) {
            throw NonRealCoefficients("palindromic root classification needs real coefficients");
        }
    }
    if (!is_palindromic(p, 1e-10)) throw NotPalindromic("coefficients are not symmetric");

    std::vector<Complex> xs = solve_poly(reduce_palindromic(p));
    std::vector<bool> used(xs.size(), false);
    std::vector<RootClassification> groups;

    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const Complex x = xs[i];
        if (std::abs(x.imag()) <= tol * std::max(1.0, std::abs(x))) {
            const auto [z1, z2] = lift_root(Complex{x.real(), 0.0});
            const RootClass kind =
                std::abs(x.real()) >= 2.0 ? RootClass::InverseRealPair : RootClass::UnitCircleConjugatePair;
            groups.push_back({kind, {z1, z2}});
            continue;
        }
        // Complex reduced roots of a real q come in conjugate pairs.
        std::size_t partner = xs.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(xs[j] - std::conj(x));
            if (dist < best) {
                best = dist;
                partner = j;
            }
        }
        std::vector<Complex> quad;
        const auto [z1, z2] = lift_root(x);
        quad = {z1, z2};
        if (partner < xs.size()) {
            used[partner] = true;
            const auto [w1, w2] = lift_root(xs[partner]);
            quad.push_back(w1);
            quad.push_back(w2);
        }
        sort_roots(quad);
        groups.push_back({RootClass::QuarticQuadruple, std::move(quad)});
    }
    return groups;
}

} // namespace paramplane
