#pragma once

#include <utility>
#include <vector>

#include "paramplane/polynomial.hpp"

namespace paramplane {

/// Sorts lexicographically by (real, imag). Every solver returns roots in
/// this order.
void sort_roots(std::vector<Complex>& roots);

/// The two roots (z, 1/z) of z^2 - x z + 1 = 0. The first element has
/// |z| >= 1; on the unit circle the one with Im >= 0 comes first.
std::pair<Complex, Complex> lift_root(Complex x);

/// Roots of a2 x^2 + a1 x + a0, cancellation-free.
std::vector<Complex> solve_quadratic(Complex a2, Complex a1, Complex a0);

/// Roots of a3 x^3 + a2 x^2 + a1 x + a0 by Cardano, Newton-polished.
std::vector<Complex> solve_cubic(Complex a3, Complex a2, Complex a1, Complex a0);

struct OracleOptions {
    int max_sweeps = 1000;
    double step_tol = 1e-13;
    double residual_tol = 1e-8;
};

/// All roots with multiplicity by Aberth-Ehrlich simultaneous iteration.
/// Throws DegenerateLeading for constant input and NoConvergence when the
/// sweep limit is hit with residuals above bound.
std::vector<Complex> solve_poly_oracle(const Polynomial& p, const OracleOptions& opts = {});

/// Closed forms up to degree 3, oracle above.
std::vector<Complex> solve_poly(const Polynomial& p);

enum class RootClass { InverseRealPair, UnitCircleConjugatePair, QuarticQuadruple };

struct RootClassification {
    RootClass kind;
    std::vector<Complex> roots;
};

const char* to_string(RootClass kind);

/// Groups the roots of a real palindromic polynomial of even degree.
/// Throws NotPalindromic, NonRealCoefficients, OddDegree.
std::vector<RootClassification> classify_palindromic_roots(const Polynomial& p, double tol = 1e-8);

} // namespace paramplane
