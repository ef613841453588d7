#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "paramplane/render.hpp"

namespace paramplane::cli {

enum class Mode { Param, Capture, Dyn, Stability };

const char* to_string(Mode m);

struct RenderJob {
    Mode mode = Mode::Param;
    Family family = Family::Kim4;
    std::optional<Complex> param; // dyn only
    Window window;
    EscapeConfig cfg;
    Palette palette;
    bool shift = false;
    std::string out;
    std::optional<std::string> grid_out;
    int workers = 0;
    bool oracle_check = false;
};

/// Window used when --window is omitted.
Window default_window(Mode mode, Family family);

/// Parses the arguments after the program name. Throws UsageError for
/// unknown or malformed flags, ValidationError for inconsistent ones.
RenderJob parse_args(const std::vector<std::string>& args);

std::string usage();

/// Binary PPM (P6) encoding: "P6\n<w> <h>\n255\n" followed by RGB rows.
std::string encode_ppm(const RasterImage& img);
void write_ppm(const RasterImage& img, const std::string& path);

void write_grid_csv(const ParamGrid& grid, std::ostream& os);
void write_grid_csv(const ParamGrid& grid, const std::string& path);

/// Renders and writes outputs, printing a one-line summary to `out` and
/// errors to `err`. Returns 0 on success, 1 on validation errors, 2 on
/// runtime errors.
int run(const RenderJob& job, std::ostream& out, std::ostream& err);

/// parse_args + run with the same exit-code convention.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace paramplane::cli
