#pragma once

#include <limits>
#include <span>
#include <vector>

#include "paramplane/polynomial.hpp"

namespace paramplane {

/// The point at infinity of the extended plane.
inline const Complex kInfinity{std::numeric_limits<double>::infinity(), 0.0};

inline bool is_infinite(Complex z) noexcept {
    return !std::isfinite(z.real()) || !std::isfinite(z.imag());
}

/// Rational map O(z) = z^n num(z) / den(z) with num = reciprocal(den).
///
/// den is stored unnormalized; both its constant and its top coefficient
/// must be nonzero, otherwise construction throws DegenerateParameter.
class NewtonLikeOperator {
public:
    NewtonLikeOperator(int n, Polynomial den);

    int n() const noexcept { return n_; }
    /// Degree k of the denominator (raw vector length - 1).
    int k() const noexcept { return static_cast<int>(den_.size()) - 1; }
    const Polynomial& den() const noexcept { return den_; }
    const Polynomial& num() const noexcept { return num_; }

    /// O(z) on the extended plane. |z| > 1 goes through O(z) = 1/O(1/z).
    Complex operator()(Complex z) const noexcept;
    /// Direct Horner evaluation, meant for |z| <= 1. Poles give kInfinity.
    Complex eval_inside(Complex z) const noexcept;

private:

    int n_;
    Polynomial den_;
    Polynomial num_;
};

inline Complex eval(const NewtonLikeOperator& op, Complex z) noexcept { return op(z); }

/// B(z) = n num den + z (num' den - num den'), so that
/// O'(z) = z^{n-1} B(z) / den(z)^2. Palindromic for every operator.
Polynomial derivative_numerator(const NewtonLikeOperator& op);

/// O'(z) for finite z; evaluated on the inner side of the unit circle.
Complex derivative(const NewtonLikeOperator& op, Complex z);

/// O'(z0) at a fixed point z0 (0 and infinity included).
/// Throws NotFixed if |O(z0) - z0| >= 1e-8.
Complex multiplier(const NewtonLikeOperator& op, Complex z0);

enum class FixedPointClass { Superattracting, Attracting, Repelling, Parabolic, IrrationallyIndifferent };

const char* to_string(FixedPointClass c);

struct FixedPointInfo {
    Complex location;
    Complex multiplier;
    FixedPointClass kind;
    /// Multiplicity as a root of the fixed-point equation.
    int multiplicity = 1;
};

FixedPointClass classify_multiplier(Complex lambda, double band = 1e-8);

/// Strange fixed points (roots of z^{n-1} num - den, clusters merged),
/// followed by 0 and infinity.
std::vector<FixedPointInfo> fixed_points(const NewtonLikeOperator& op);

/// Free critical points grouped by the z -> 1/z symmetry.
struct CriticalSet {
    /// One member of each pair {c, 1/c}: |c| >= 1, Im >= 0 on the unit circle.
    std::vector<Complex> representatives;
    std::vector<Complex> full;
};

/// Representative of the pair {c, 1/c}.
Complex symmetry_representative(Complex c);

/// Builds a CriticalSet from a list of points closed under z -> 1/z
/// (one entry per pair is enough).
CriticalSet make_critical_set(std::span<const Complex> points);

/// Roots of B after dividing out the known prefixed factors, solved through
/// the palindromic reduction. Throws DeflationResidual or NotPalindromic.
CriticalSet free_critical_points(const NewtonLikeOperator& op,
                                 std::span<const Polynomial> known_prefixed = {});

} // namespace paramplane
