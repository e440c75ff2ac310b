#pragma once

#include <stdexcept>
#include <string>

namespace cubiq {

// Base for all geometric/algebraic failure modes so callers can catch
// everything from this library with one handler.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two coincident projective points where a genuine span was required.
struct degenerate_error : error {
    explicit degenerate_error(const std::string& msg) : error(msg) {}
};

struct undefined_gcd_error : error {
    undefined_gcd_error() : error("gcd(0, 0) is undefined") {}
};

struct not_a_root_error : error {
    explicit not_a_root_error(const std::string& msg) : error(msg) {}
};

struct singular_point_error : error {
    explicit singular_point_error(const std::string& msg) : error(msg) {}
};

struct contained_line_error : error {
    explicit contained_line_error(const std::string& msg) : error(msg) {}
};

struct plane_in_surface_error : error {
    explicit plane_in_surface_error(const std::string& msg) : error(msg) {}
};

struct degenerate_surface_error : error {
    explicit degenerate_surface_error(const std::string& msg) : error(msg) {}
};

struct excluded_curve_error : error {
    explicit excluded_curve_error(const std::string& msg) : error(msg) {}
};

struct isotropic_center_error : error {
    explicit isotropic_center_error(const std::string& msg) : error(msg) {}
};

struct chart_error : error {
    explicit chart_error(const std::string& msg) : error(msg) {}
};

struct goodness_error : error {
    explicit goodness_error(const std::string& msg) : error(msg) {}
};

struct scan_refused_error : error {
    explicit scan_refused_error(const std::string& msg) : error(msg) {}
};

struct size_guard_error : error {
    explicit size_guard_error(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace cubiq
