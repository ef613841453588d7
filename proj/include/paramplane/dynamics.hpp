#pragma once

#include <span>
#include <vector>

#include "paramplane/operator.hpp"

namespace paramplane {

/// Stop criterion for orbits. eps is always 1/esc so that the test respects
/// the z -> 1/z symmetry of the operators.
class EscapeConfig {
public:
    static constexpr int kParamMaxIter = 500;
    static constexpr int kDynMaxIter = 2000;

    EscapeConfig() = default;
    EscapeConfig(double esc, int max_iter, double target_tol = 1e-6);

    double esc() const noexcept { return esc_; }
    double eps() const noexcept { return 1.0 / esc_; }
    int max_iter() const noexcept { return max_iter_; }
    double target_tol() const noexcept { return target_tol_; }

private:
    double esc_ = 1e4;
    int max_iter_ = kParamMaxIter;
    double target_tol_ = 1e-6;
};

/// A point an orbit may settle on besides the roots, with its own
/// capture radius (parabolic points need a looser one).
struct Target {
    Complex point;
    double tol;
};

enum class OrbitKind { ToZero, ToInfinity, ToTarget, NonConverged };

struct OrbitOutcome {
    OrbitKind kind = OrbitKind::NonConverged;
    int iterations = 0;
    /// Index into the target list for ToTarget, -1 otherwise.
    int target = -1;

    bool to_root() const noexcept { return kind == OrbitKind::ToZero || kind == OrbitKind::ToInfinity; }
    bool operator==(const OrbitOutcome&) const = default;
};

const char* to_string(OrbitKind k);

/// Iterates z <- O(z). Before each step: |z| < eps, then |z| > esc, then the
/// targets in order. Non-finite values count as escaping.
OrbitOutcome classify_orbit(const NewtonLikeOperator& op, Complex z0, const EscapeConfig& cfg,
                            std::span<const Target> targets = {});

/// Convenience form: every target uses cfg.target_tol().
OrbitOutcome classify_orbit(const NewtonLikeOperator& op, Complex z0, const EscapeConfig& cfg,
                            std::span<const Complex> targets);

struct ConvergenceSummary {
    bool all_converged = false;
    int count_converged = 0;
    int slowest_iters = 0;

    bool operator==(const ConvergenceSummary&) const = default;
};

/// Only ToZero/ToInfinity count as converged.
ConvergenceSummary slowest_convergence(std::span<const OrbitOutcome> outcomes);

enum class CycleVerdict { Capture, Disjoint, Inconclusive };

const char* to_string(CycleVerdict v);

struct SameCycleOptions {
    int refine = 10000;
    int window = 100;
    double tol = 1e-6;
};

/// Whether two non-escaping critical orbits end on the same cycle up to
/// symmetry. c1 and 1/c1 are each refined and a window of their iterates is
/// stored; c3 is refined once and compared against both windows. Cycles of
/// period >= window are not detected.
CycleVerdict same_cycle(const NewtonLikeOperator& op, Complex c1, Complex c3, const SameCycleOptions& opts = {});

} // namespace paramplane
