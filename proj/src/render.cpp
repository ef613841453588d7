#include "paramplane/render.hpp"

#include <cmath>
#include <limits>

#include "paramplane/errors.hpp"
#include "parallel.hpp"

namespace paramplane {

void Window::validate() const {
    if (!(xmin < xmax) || !(ymin < ymax)) throw ValidationError("window needs xmin < xmax and ymin < ymax");
    if (width <= 0 || height <= 0) throw ValidationError("window resolution must be positive");
}

Complex Window::point(int i, int j) const noexcept {
    return {xmin + (i + 0.5) * (xmax - xmin) / width, ymax - (j + 0.5) * (ymax - ymin) / height};
}

std::optional<std::pair<int, int>> Window::pixel_of(Complex z) const noexcept {
    if (is_infinite(z)) return std::nullopt;
    const double fi = std::floor((z.real() - xmin) / (xmax - xmin) * width);
    const double fj = std::floor((ymax - z.imag()) / (ymax - ymin) * height);
    if (fi < 0 || fj < 0 || fi >= width || fj >= height) return std::nullopt;
    return std::pair{static_cast<int>(fi), static_cast<int>(fj)};
}

RGB Palette::count_color(int n) const noexcept {
    if (n < 0) n = 0;
    return counts[std::min<std::size_t>(static_cast<std::size_t>(n), counts.size() - 1)];
}

RGB Palette::gradient_at(double t) const noexcept {
    if (!(t > 0.0)) t = 0.0;
    if (t > 1.0) t = 1.0;
    const double pos = t * double(gradient.size() - 1);
    const std::size_t seg = std::min<std::size_t>(static_cast<std::size_t>(pos), gradient.size() - 2);
    const double f = pos - double(seg);
    const RGB& lo = gradient[seg];
    const RGB& hi = gradient[seg + 1];
    const auto mix = [f](std::uint8_t x, std::uint8_t y) {
        return static_cast<std::uint8_t>(std::lround(x + f * (double(y) - double(x))));
    };
    return {mix(lo.r, hi.r), mix(lo.g, hi.g), mix(lo.b, hi.b)};
}

double gradient_position(int iters, int max_iter) noexcept {
    if (max_iter <= 0) return 0.0;
    const double t = std::log1p(double(std::max(iters, 0))) / std::log1p(double(max_iter));
    return std::clamp(t, 0.0, 1.0);
}

RasterImage::RasterImage(int width, int height, RGB fill)
    : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * height * 3) {
    for (std::size_t p = 0; p < pixels_.size(); p += 3) {
        pixels_[p] = fill.r;
        pixels_[p + 1] = fill.g;
        pixels_[p + 2] = fill.b;
    }
}

RGB RasterImage::at(int i, int j) const noexcept {
    const std::size_t p = (static_cast<std::size_t>(j) * width_ + i) * 3;
    return {pixels_[p], pixels_[p + 1], pixels_[p + 2]};
}

void RasterImage::set(int i, int j, RGB c) noexcept {
    const std::size_t p = (static_cast<std::size_t>(j) * width_ + i) * 3;
    pixels_[p] = c.r;
    pixels_[p + 1] = c.g;
    pixels_[p + 2] = c.b;
}

namespace {

bool all_finite(const std::vector<Complex>& v) {
    for (const auto& z : v) {
        if (is_infinite(z) || std::isnan(z.real()) || std::isnan(z.imag()) || z == Complex{0.0}) return false;
    }
    return true;
}

// Largest distance from a member of `got` to the nearest member of `want`,
// relative to max(1, |z|).
double set_distance(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    double worst = 0.0;
    for (const auto& g : got) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& w : want) best = std::min(best, std::abs(g - w) / std::max(1.0, std::abs(g)));
        worst = std::max(worst, best);
    }
    return worst;
}

} // namespace

ParamCell compute_param_cell(const FamilyId& id, const EscapeConfig& cfg, bool capture, CriticalSource source) {
    ParamCell cell;
    cell.a = id.a;
    cell.n_free = free_critical_count(id.family);

    std::optional<NewtonLikeOperator> op;
    std::vector<Complex> reps;
    try {
        op.emplace(instantiate(id));
        if (source == CriticalSource::ClosedForm) {
            reps = closed_form_criticals(id).representatives;
            // The radical formulas can hit 0/0 off the degenerate set.
            if (!all_finite(reps)) reps = numeric_criticals(id).representatives;
        } else {
            reps = numeric_criticals(id).representatives;
        }
    } catch (const Error&) {
        cell.degenerate = true;
        return cell;
    }
    if (!all_finite(reps) || static_cast<int>(reps.size()) != cell.n_free) {
        cell.degenerate = true;
        return cell;
    }

    std::vector<OrbitOutcome> outcomes;
    outcomes.reserve(reps.size());
    for (const Complex& c : reps) outcomes.push_back(classify_orbit(*op, c, cfg, std::span<const Target>{}));
    const ConvergenceSummary summary = slowest_convergence(outcomes);
    cell.n_converged = summary.count_converged;
    cell.slowest_iters = summary.slowest_iters;

    if (capture && cell.n_converged == 0 && reps.size() == 2) cell.verdict = same_cycle(*op, reps[0], reps[1]);
    return cell;
}

RGB colormap(const ParamCell& cell, const Palette& palette, const EscapeConfig& cfg, bool shift) noexcept {
    if (cell.degenerate) return palette.degenerate;
    const bool full = cell.n_converged == cell.n_free ||
                      (shift && cell.n_converged >= 1 && cell.n_converged == cell.n_free - 1);
    if (full) return palette.gradient_at(gradient_position(cell.slowest_iters, cfg.max_iter()));
    if (cell.n_converged == 0 && cell.verdict) {
        return *cell.verdict == CycleVerdict::Disjoint ? palette.disjoint : palette.capture;
    }
    return palette.count_color(cell.n_converged);
}

namespace {

ParamPlane sweep_parameter_plane(Family family, const Window& window, const EscapeConfig& cfg,
                                 const Palette& palette, bool shift, bool capture, const SweepOptions& sweep) {
    window.validate();
    ParamPlane out;
    out.grid.window = window;
    out.grid.cells.resize(static_cast<std::size_t>(window.width) * window.height);
    out.image = RasterImage(window.width, window.height);
    std::vector<int> samples(window.height, 0), mismatches(window.height, 0);

    detail::for_each_row(window.height, sweep.workers, [&](int j) {
        for (int i = 0; i < window.width; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * window.width + i;
            const FamilyId id{family, window.point(i, j)};
            ParamCell cell = compute_param_cell(id, cfg, capture);
            if (sweep.oracle_check && idx % 100 == 0 && !cell.degenerate) {
                ++samples[j];
                try {
                    const auto closed = closed_form_criticals(id).representatives;
                    const auto numeric = numeric_criticals(id).representatives;
                    if (!(set_distance(closed, numeric) < 1e-6)) ++mismatches[j];
                } catch (const Error&) {
                    ++mismatches[j];
                }
            }
            out.image.set(i, j, colormap(cell, palette, cfg, shift));
            out.grid.cells[idx] = std::move(cell);
        }
    });
    for (int j = 0; j < window.height; ++j) {
        out.oracle_samples += samples[j];
        out.oracle_mismatches += mismatches[j];
    }
    return out;
}

void draw_marker(RasterImage& img, const Window& window, Complex z, RGB color) {
    const auto pix = window.pixel_of(z);
    if (!pix) return;
    const auto [ci, cj] = *pix;
    for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
            const int i = ci + di, j = cj + dj;
            if (i >= 0 && j >= 0 && i < img.width() && j < img.height()) img.set(i, j, color);
        }
    }
}

} // namespace

ParamPlane render_parameter_plane(Family family, const Window& window, const EscapeConfig& cfg,
                                  const Palette& palette, bool shift, const SweepOptions& sweep) {
    return sweep_parameter_plane(family, window, cfg, palette, shift, false, sweep);
}

ParamPlane render_capture_plane(Family family, const Window& window, const EscapeConfig& cfg,
                                const Palette& palette, const SweepOptions& sweep) {
    if (free_critical_count(family) != 2) {
        throw ValidationError("capture planes need exactly two representative critical points; " +
                              std::string(to_string(family)) + " has " +
                              std::to_string(free_critical_count(family)));
    }
    return sweep_parameter_plane(family, window, cfg, palette, false, true, sweep);
}

std::vector<Target> default_targets(Family family, const EscapeConfig& cfg) {
    std::vector<Target> targets{{1.0, cfg.target_tol()}};
    if (family == Family::ErmakovKalitkin) targets.push_back({-1.0, 1e-3});
    return targets;
}

DynamicalPlane render_dynamical_plane(const NewtonLikeOperator& op, const Window& window, const EscapeConfig& cfg,
                                      const Palette& palette, const CriticalSet& criticals,
                                      std::span<const Target> targets, const SweepOptions& sweep) {
    window.validate();
    DynamicalPlane out;
    out.image = RasterImage(window.width, window.height);
    out.outcomes.resize(static_cast<std::size_t>(window.width) * window.height);

    detail::for_each_row(window.height, sweep.workers, [&](int j) {
        for (int i = 0; i < window.width; ++i) {
            const OrbitOutcome o = classify_orbit(op, window.point(i, j), cfg, targets);
            RGB color = palette.unresolved;
            switch (o.kind) {
            case OrbitKind::ToZero:
            case OrbitKind::ToInfinity:
                color = palette.gradient_at(gradient_position(o.iterations, cfg.max_iter()));
                break;
            case OrbitKind::ToTarget:
                color = o.target == 0 ? palette.target_basin : palette.other_target_basin;
                break;
            case OrbitKind::NonConverged:
                break;
            }
            out.image.set(i, j, color);
            out.outcomes[static_cast<std::size_t>(j) * window.width + i] = o;
        }
    });
    for (const Complex& c : criticals.full) draw_marker(out.image, window, c, palette.marker);
    return out;
}

StabilityMap render_stability_map(Family family, const Window& window, const Palette& palette,
                                  const SweepOptions& sweep) {
    window.validate();
    StabilityMap out;
    out.image = RasterImage(window.width, window.height);
    out.abs_multiplier_one.assign(static_cast<std::size_t>(window.width) * window.height,
                                  std::numeric_limits<double>::quiet_NaN());

    detail::for_each_row(window.height, sweep.workers, [&](int j) {
        for (int i = 0; i < window.width; ++i) {
            const std::size_t idx = static_cast<std::size_t>(j) * window.width + i;
            std::optional<NewtonLikeOperator> op;
            try {
                op.emplace(instantiate({family, window.point(i, j)}));
            } catch (const DegenerateParameter&) {
                out.image.set(i, j, palette.degenerate);
                continue;
            }
            double mag = std::numeric_limits<double>::infinity();
            try {
                mag = std::abs(multiplier(*op, 1.0));
            } catch (const NotFixed&) {
                // den(1) = 0: z = 1 sits on a pole, never attracting.
            }
            out.abs_multiplier_one[idx] = mag;

            RGB color = palette.neutral;
            if (mag < 1.0) {
                color = palette.stable_fixed;
            } else if (family == Family::ChebyshevMultipoint) {
                try {
                    for (const auto& fp : fixed_points(*op)) {
                        if (is_infinite(fp.location) || std::abs(fp.location) < 1e-12) continue;
                        if (std::abs(fp.location - 1.0) < 1e-6 || std::abs(fp.location + 1.0) < 1e-6) continue;
                        if (std::abs(fp.multiplier) < 1.0) {
                            color = palette.stable_pair;
                            break;
                        }
                    }
                } catch (const Error&) {
                }
            }
            out.image.set(i, j, color);
        }
    });
    return out;
}

} // namespace paramplane
