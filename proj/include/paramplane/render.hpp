#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "paramplane/dynamics.hpp"
#include "paramplane/families.hpp"

namespace paramplane {

/// Axis-aligned sample grid. Pixel (i, j) samples the center of its cell,
/// row 0 at the top.
struct Window {
    double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;
    int width = 1, height = 1;

    /// Throws ValidationError on an empty box or non-positive size.
    void validate() const;
    Complex point(int i, int j) const noexcept;
    /// Pixel containing z, if any.
    std::optional<std::pair<int, int>> pixel_of(Complex z) const noexcept;
    double pixel_width() const noexcept { return (xmax - xmin) / width; }
    double pixel_height() const noexcept { return (ymax - ymin) / height; }
};

struct RGB {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const RGB&) const = default;
};

struct Palette {
    /// Gradient for fully converged cells, fast (t = 0) to slow (t = 1).
    std::array<RGB, 5> gradient{{
        {255, 0, 0},     // red
        {255, 255, 0},   // yellow
        {152, 251, 152}, // pallid green
        {0, 0, 255},     // blue
        {255, 255, 255}, // white
    }};
    /// Colors by number of converged critical orbits; the last entry covers
    /// every count beyond the table.
    std::array<RGB, 5> counts{{
        {0, 0, 0},       // none
        {255, 105, 180}, // pink
        {0, 100, 0},     // dark green
        {255, 140, 0},   // orange
        {128, 128, 128}, // gray
    }};
    RGB degenerate{255, 0, 255};
    RGB disjoint{30, 60, 230};
    RGB capture{0, 0, 0};
    RGB target_basin{0, 100, 0};
    RGB other_target_basin{0, 0, 0};
    RGB unresolved{0, 0, 0};
    RGB marker{255, 255, 255};
    RGB stable_fixed{0, 170, 0};
    RGB stable_pair{220, 0, 0};
    RGB neutral{255, 255, 255};

    RGB count_color(int n) const noexcept;
    /// Piecewise-linear lookup, t clamped to [0, 1].
    RGB gradient_at(double t) const noexcept;
};

/// log(1 + iters) / log(1 + max_iter), clamped to [0, 1].
double gradient_position(int iters, int max_iter) noexcept;

class RasterImage {
public:
    RasterImage() = default;
    RasterImage(int width, int height, RGB fill = {});

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    /// Row-major RGB8, top row first.
    const std::vector<std::uint8_t>& bytes() const noexcept { return pixels_; }

    RGB at(int i, int j) const noexcept;
    void set(int i, int j, RGB c) noexcept;

    bool operator==(const RasterImage&) const = default;

private:
    int width_ = 0, height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

struct ParamCell {
    Complex a;
    int n_free = 0;
    int n_converged = 0;
    int slowest_iters = 0;
    std::optional<CycleVerdict> verdict;
    bool degenerate = false;

    bool operator==(const ParamCell&) const = default;
};

struct ParamGrid {
    Window window;
    std::vector<ParamCell> cells; // row-major

    const ParamCell& at(int i, int j) const { return cells[static_cast<std::size_t>(j) * window.width + i]; }
    bool operator==(const ParamGrid& o) const { return cells == o.cells; }
};

struct SweepOptions {
    /// 0 picks std::thread::hardware_concurrency().
    int workers = 0;
    /// Re-derive the critical points numerically on a 1% pixel sample and
    /// count disagreements with the closed forms.
    bool oracle_check = false;
};

/// Which critical points seed the orbits of a parameter cell.
enum class CriticalSource { ClosedForm, Numeric };

/// One parameter-plane pixel: every representative critical orbit is
/// classified against the roots. With capture = true, cells where no orbit
/// converges also get a same_cycle verdict.
ParamCell compute_param_cell(const FamilyId& id, const EscapeConfig& cfg, bool capture = false,
                             CriticalSource source = CriticalSource::ClosedForm);

/// Color of a parameter cell. shift selects the variant where one orbit
/// short of full convergence already uses the gradient.
RGB colormap(const ParamCell& cell, const Palette& palette, const EscapeConfig& cfg, bool shift) noexcept;

struct ParamPlane {
    ParamGrid grid;
    RasterImage image;
    int oracle_samples = 0;
    int oracle_mismatches = 0;
};

ParamPlane render_parameter_plane(Family family, const Window& window, const EscapeConfig& cfg,
                                  const Palette& palette, bool shift, const SweepOptions& sweep = {});

/// Parameter plane with capture/disjoint detection. Requires exactly two
/// representative critical points (ValidationError otherwise).
ParamPlane render_capture_plane(Family family, const Window& window, const EscapeConfig& cfg,
                                const Palette& palette, const SweepOptions& sweep = {});

struct DynamicalPlane {
    RasterImage image;
    std::vector<OrbitOutcome> outcomes; // row-major, one per pixel
};

/// Targets default to {z = 1}. Target 0 is painted as the target basin,
/// further targets with other_target_basin. White squares mark every member
/// of criticals.full inside the window.
DynamicalPlane render_dynamical_plane(const NewtonLikeOperator& op, const Window& window, const EscapeConfig& cfg,
                                      const Palette& palette, const CriticalSet& criticals,
                                      std::span<const Target> targets, const SweepOptions& sweep = {});

/// Default dynamical-plane targets for a family: z = 1, plus the parabolic
/// point z = -1 (tolerance 1e-3) for ErmakovKalitkin.
std::vector<Target> default_targets(Family family, const EscapeConfig& cfg);

struct StabilityMap {
    RasterImage image;
    /// |O'(1)| per pixel, NaN where the parameter is degenerate.
    std::vector<double> abs_multiplier_one;
};

/// Green where z = 1 attracts; red (ChebyshevMultipoint only) where the
/// strange fixed pair attracts; magenta on degenerate parameters.
StabilityMap render_stability_map(Family family, const Window& window, const Palette& palette = {},
                                  const SweepOptions& sweep = {});

} // namespace paramplane
