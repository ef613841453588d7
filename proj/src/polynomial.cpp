#include "paramplane/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "paramplane/errors.hpp"

namespace paramplane {

Polynomial::Polynomial(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
}

double Polynomial::max_magnitude() const noexcept {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

std::size_t Polynomial::degree(double rel_threshold) const noexcept {
    const double cut = rel_threshold * max_magnitude();
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (std::abs(coeffs_[i]) > cut) return i;
    }
    return 0;
}

Polynomial Polynomial::trimmed(double rel_threshold) const {
    const std::size_t d = degree(rel_threshold);
    return Polynomial(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

Complex Polynomial::operator()(Complex z) const noexcept {
    Complex acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

double Polynomial::abs_eval(double r) const noexcept {
    double acc = std::abs(coeffs_.back());
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * r + std::abs(coeffs_[i]);
    return acc;
}

Polynomial reciprocal(const Polynomial& p) {
    std::vector<Complex> c(p.coeffs().rbegin(), p.coeffs().rend());
    return Polynomial(std::move(c));
}

namespace {

template <typename Combine>
bool symmetric_within(const Polynomial& p, double tol, Combine combine) {
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    const double bound = tol * p.max_magnitude();
    for (std::size_t i = 0; i <= n / 2; ++i) {
        if (std::abs(combine(c[i], c[n - i])) > bound) return false;
    }
    return true;
}

} // namespace

bool is_palindromic(const Polynomial& p, double tol) {
    return symmetric_within(p, tol, [](Complex a, Complex b) { return a - b; });
}

bool is_antipalindromic(const Polynomial& p, double tol) {
    return symmetric_within(p, tol, [](Complex a, Complex b) { return a + b; });
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> c(std::max(p.size(), q.size()), Complex{0.0});
    for (std::size_t i = 0; i < p.size(); ++i) c[i] += p[i];
    for (std::size_t i = 0; i < q.size(); ++i) c[i] += q[i];
    return Polynomial(std::move(c));
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) {
    return poly_add(p, poly_scale(q, -1.0));
}

Polynomial poly_scale(const Polynomial& p, Complex s) {
    std::vector<Complex> c = p.coeffs();
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
    std::vector<Complex> c(p.size() + q.size() - 1, Complex{0.0});
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) c[i + j] += p[i] * q[j];
    }
    return Polynomial(std::move(c));
}

Polynomial poly_derivative(const Polynomial& p) {
    if (p.size() == 1) return Polynomial{0.0};
    std::vector<Complex> c(p.size() - 1);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) c[i] = static_cast<double>(i + 1) * p[i + 1];
    return Polynomial(std::move(c));
}

Division poly_divmod(const Polynomial& p, const Polynomial& divisor) {
    const Polynomial d = divisor.trimmed();
    const std::size_t dd = d.size() - 1;
    const Complex lead = d.coeffs().back();
    if (std::abs(lead) == 0.0) throw DegenerateLeading("division by the zero polynomial");

    std::vector<Complex> rem = p.coeffs();
    if (rem.size() <= dd) return {Polynomial{0.0}, p};

    std::vector<Complex> quot(rem.size() - dd, Complex{0.0});
    for (std::size_t k = quot.size(); k-- > 0;) {
        const Complex qk = rem[k + dd] / lead;
        quot[k] = qk;
        for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= qk * d[j];
    }
    rem.resize(std::max<std::size_t>(dd, 1));
    if (dd == 0) rem[0] = 0.0;
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial deflate(const Polynomial& p, const Polynomial& factor, double rel_tol) {
    auto [quot, rem] = poly_divmod(p, factor);
    const double scale = p.max_magnitude();
    if (rem.max_magnitude() > rel_tol * scale) {
        throw DeflationResidual("factor does not divide polynomial (residual " +
                                std::to_string(rem.max_magnitude() / scale) + " relative)");
    }
    return quot;
}

Polynomial reduce_palindromic(const Polynomial& p) {
    const Polynomial t = p.trimmed();
    const std::size_t n = t.size() - 1;
    if (n % 2 != 0) throw OddDegree("palindromic reduction needs even degree, got " + std::to_string(n));
    const std::size_t m = n / 2;
    const double scale = t.max_magnitude();

    // Peel q_j z^{m-j} (z^2+1)^j off the top; binomial row holds C(j, i).
    std::vector<Complex> rem = t.coeffs();
    std::vector<Complex> q(m + 1, Complex{0.0});
    std::vector<double> binom;
    for (std::size_t j = m + 1; j-- > 0;) {
        binom.assign(j + 1, 1.0);
        for (std::size_t i = 1; i < j; ++i) binom[i] = binom[i - 1] * double(j - i + 1) / double(i);
        const Complex qj = rem[m + j];
        q[j] = qj;
        for (std::size_t i = 0; i <= j; ++i) rem[m - j + 2 * i] -= qj * binom[i];
    }

    double residual = 0.0;
    for (const auto& r : rem) residual = std::max(residual, std::abs(r));
    if (residual > 1e-10 * scale) {
        throw NotPalindromic("reduction residual " + std::to_string(residual / scale) + " relative");
    }
    return Polynomial(std::move(q));
}

} // namespace paramplane
