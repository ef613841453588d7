#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace paramplane {

using Complex = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending degree order
/// (coeffs()[i] multiplies z^i).
///
/// The raw coefficient vector is kept exactly as given; trailing
/// near-zero entries are only ignored by degree() and trimmed(), never
/// dropped silently. This matters for reciprocal(), which reverses the
/// raw vector.
class Polynomial {
public:
    static constexpr double kZeroThreshold = 1e-12;

    Polynomial() : coeffs_{Complex{0.0}} {}
    Polynomial(std::initializer_list<Complex> coeffs);
    explicit Polynomial(std::vector<Complex> coeffs);

    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

    /// Largest coefficient magnitude (0 for the zero polynomial).
    double max_magnitude() const noexcept;

    /// Index of the last coefficient whose magnitude exceeds
    /// rel_threshold * max_magnitude(). The zero polynomial has degree 0.
    std::size_t degree(double rel_threshold = kZeroThreshold) const noexcept;

    /// Copy with the coefficients above degree() removed.
    Polynomial trimmed(double rel_threshold = kZeroThreshold) const;

    /// Horner evaluation.
    Complex operator()(Complex z) const noexcept;

    /// Sum of |c_i| |z|^i; the natural scale for residuals of p(z).
    double abs_eval(double r) const noexcept;

    bool operator==(const Polynomial&) const = default;

private:
    std::vector<Complex> coeffs_;
};

Polynomial reciprocal(const Polynomial& p);

bool is_palindromic(const Polynomial& p, double tol);
bool is_antipalindromic(const Polynomial& p, double tol);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, Complex s);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_derivative(const Polynomial& p);

struct Division {
    Polynomial quotient;
    Polynomial remainder;
};

/// Long division p = quotient * divisor + remainder, deg(remainder) < deg(divisor).
/// Throws DegenerateLeading when the divisor is (numerically) zero.
Division poly_divmod(const Polynomial& p, const Polynomial& divisor);

/// Divides out a factor that is claimed to divide p exactly.
/// Throws DeflationResidual if the remainder exceeds rel_tol * max|p|.
Polynomial deflate(const Polynomial& p, const Polynomial& factor, double rel_tol = 1e-8);

/// For palindromic p of even degree 2m returns q of degree m with
/// z^m q(z + 1/z) = p(z). Throws OddDegree or NotPalindromic.
Polynomial reduce_palindromic(const Polynomial& p);

} // namespace paramplane
