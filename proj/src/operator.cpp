#include "paramplane/operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "paramplane/errors.hpp"
#include "paramplane/roots.hpp"

namespace paramplane {

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

NewtonLikeOperator::NewtonLikeOperator(int n, Polynomial den)
    : n_(n), den_(std::move(den)), num_(reciprocal(den_)) {
    if (n_ < 1) throw DegenerateParameter("operator exponent must be positive");
    const double scale = den_.max_magnitude();
    const Complex d0 = den_.coeffs().front();
    const Complex dk = den_.coeffs().back();
    const double cut = Polynomial::kZeroThreshold * scale;
    if (scale == 0.0 || std::abs(d0) <= cut || std::abs(dk) <= cut) {
        throw DegenerateParameter("denominator constant or leading coefficient vanishes");
    }
}

Complex NewtonLikeOperator::eval_inside(Complex z) const noexcept {
    const Complex d = den_(z);
    if (std::abs(d) < 1e-300) return kInfinity;
    return ipow(z, n_) * num_(z) / d;
}

Complex NewtonLikeOperator::operator()(Complex z) const noexcept {
    if (is_infinite(z)) return kInfinity;
    if (std::norm(z) <= 1.0) return eval_inside(z);
    const Complex v = eval_inside(1.0 / z);
    if (is_infinite(v)) return 0.0;
    if (v == Complex{0.0}) return kInfinity;
    return 1.0 / v;
}

Polynomial derivative_numerator(const NewtonLikeOperator& op) {
    const Polynomial& num = op.num();
    const Polynomial& den = op.den();
    const Polynomial first = poly_scale(poly_mul(num, den), double(op.n()));
    const Polynomial bracket =
        poly_sub(poly_mul(poly_derivative(num), den), poly_mul(num, poly_derivative(den)));
    return poly_add(first, poly_mul(Polynomial{0.0, 1.0}, bracket));
}

namespace {

// O'(z) for |z| <= 1 given a precomputed derivative numerator.
Complex derivative_inside(const NewtonLikeOperator& op, const Polynomial& b, Complex z) {
    const Complex d = op.den()(z);
    return ipow(z, op.n() - 1) * b(z) / (d * d);
}

Complex derivative_with(const NewtonLikeOperator& op, const Polynomial& b, Complex z) {
    if (std::norm(z) <= 1.0) return derivative_inside(op, b, z);
    // O(z) = 1/O(w), w = 1/z  =>  O'(z) = O'(w) / (O(w)^2 z^2).
    const Complex w = 1.0 / z;
    const Complex ow = op(w);
    return derivative_inside(op, b, w) / (ow * ow * z * z);
}

// The map is conjugate to itself under z -> 1/z, so multipliers at z0 and
// 1/z0 coincide and the inner side is always used.
Complex multiplier_unchecked(const NewtonLikeOperator& op, const Polynomial& b, Complex z0) {
    if (is_infinite(z0)) return derivative_inside(op, b, 0.0);
    if (std::norm(z0) > 1.0) z0 = 1.0 / z0;
    return derivative_inside(op, b, z0);
}

} // namespace

Complex derivative(const NewtonLikeOperator& op, Complex z) {
    return derivative_with(op, derivative_numerator(op), z);
}

Complex multiplier(const NewtonLikeOperator& op, Complex z0) {
    if (!is_infinite(z0)) {
        const Complex inner = std::norm(z0) > 1.0 ? 1.0 / z0 : z0;
        const Complex image = op(inner);
        if (is_infinite(image) || std::abs(image - inner) >= 1e-8) {
            throw NotFixed("point is not fixed by the operator");
        }
    }
    return multiplier_unchecked(op, derivative_numerator(op), z0);
}

const char* to_string(FixedPointClass c) {
    switch (c) {
    case FixedPointClass::Superattracting: return "superattracting";
    case FixedPointClass::Attracting: return "attracting";
    case FixedPointClass::Repelling: return "repelling";
    case FixedPointClass::Parabolic: return "parabolic";
    case FixedPointClass::IrrationallyIndifferent: return "irrationally-indifferent";
    }
    return "?";
}

FixedPointClass classify_multiplier(Complex lambda, double band) {
    const double mag = std::abs(lambda);
    if (mag < 1e-10) return FixedPointClass::Superattracting;
    if (mag < 1.0 - band) return FixedPointClass::Attracting;
    if (mag > 1.0 + band) return FixedPointClass::Repelling;
    double turns = std::arg(lambda) / (2.0 * std::numbers::pi);
    if (turns < 0.0) turns += 1.0;
    for (int s = 1; s <= 64; ++s) {
        const double scaled = turns * s;
        if (std::abs(scaled - std::round(scaled)) / s <= 1e-8) return FixedPointClass::Parabolic;
    }
    return FixedPointClass::IrrationallyIndifferent;
}

namespace {

// Newton on the (m-1)-th derivative, where a root of multiplicity m is simple.
Complex polish_multiple_root(const Polynomial& p, Complex z, int m) {
    Polynomial d = p;
    for (int i = 1; i < m; ++i) d = poly_derivative(d);
    const Polynomial dd = poly_derivative(d);
    for (int step = 0; step < 8; ++step) {
        const Complex slope = dd(z);
        if (slope == Complex{0.0}) break;
        const Complex delta = d(z) / slope;
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag()) || std::abs(delta) > 1e-3) break;
        z -= delta;
        if (std::abs(delta) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

} // namespace

std::vector<FixedPointInfo> fixed_points(const NewtonLikeOperator& op) {
    // O(z) - z = z (z^{n-1} num - den) / den.
    const std::size_t shift = static_cast<std::size_t>(op.n() - 1);
    std::vector<Complex> c(std::max(shift + op.num().size(), op.den().size()), Complex{0.0});
    for (std::size_t i = 0; i < op.num().size(); ++i) c[i + shift] += op.num()[i];
    for (std::size_t i = 0; i < op.den().size(); ++i) c[i] -= op.den()[i];
    const Polynomial equation(std::move(c));
    const Polynomial b = derivative_numerator(op);

    std::vector<FixedPointInfo> out;
    if (equation.trimmed().size() > 1) {
        const std::vector<Complex> roots = solve_poly_oracle(equation);
        std::vector<bool> used(roots.size(), false);
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            // A root of multiplicity m comes back as a cluster of radius ~eps^{1/m};
            // its mean is accurate to working precision.
            Complex sum{0.0};
            int count = 0;
            for (std::size_t j = i; j < roots.size(); ++j) {
                if (!used[j] && std::abs(roots[j] - roots[i]) <= 1e-4 * std::max(1.0, std::abs(roots[i]))) {
                    used[j] = true;
                    sum += roots[j];
                    ++count;
                }
            }
            Complex z = sum / double(count);
            if (count > 1) z = polish_multiple_root(equation, z, count);
            const Complex lambda = multiplier_unchecked(op, b, z);
            out.push_back({z, lambda, classify_multiplier(lambda), count});
        }
    }
    std::sort(out.begin(), out.end(), [](const FixedPointInfo& a, const FixedPointInfo& b) {
        if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    for (Complex z : {Complex{0.0}, kInfinity}) {
        const Complex lambda = multiplier_unchecked(op, b, z);
        out.push_back({z, lambda, classify_multiplier(lambda), 1});
    }
    return out;
}

Complex symmetry_representative(Complex c) {
    const double m = std::abs(c);
    if (std::abs(m - 1.0) <= 1e-12) return c.imag() >= 0.0 ? c : 1.0 / c;
    return m > 1.0 ? c : 1.0 / c;
}

CriticalSet make_critical_set(std::span<const Complex> points) {
    CriticalSet set;
    for (const Complex& p : points) {
        const Complex rep = symmetry_representative(p);
        const Complex partner = 1.0 / rep;
        set.representatives.push_back(rep);
        set.full.push_back(rep);
        if (std::abs(partner - rep) > 1e-12) set.full.push_back(partner);
    }
    sort_roots(set.representatives);
    sort_roots(set.full);
    return set;
}

CriticalSet free_critical_points(const NewtonLikeOperator& op, std::span<const Polynomial> known_prefixed) {
    Polynomial b = derivative_numerator(op).trimmed();
    for (const Polynomial& factor : known_prefixed) b = deflate(b, factor).trimmed();

    std::vector<Complex> points;
    if (b.size() % 2 == 0) {
        // Odd degree: -1 is a root; the quotient stays palindromic.
        b = deflate(b, Polynomial{1.0, 1.0}).trimmed();
        points.push_back(-1.0);
    }
    if (!is_palindromic(b, 1e-8)) throw NotPalindromic("deflated derivative numerator is not palindromic");
    if (b.size() > 1) {
        for (const Complex& x : solve_poly(reduce_palindromic(b))) points.push_back(lift_root(x).first);
    }
    return make_critical_set(points);
}

} // namespace paramplane
