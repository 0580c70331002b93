#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycycle {

enum class ErrorKind {
    // planar_map
    non_involutive_alpha,
    disconnected,
    loop_edge,
    // polycycle validation
    bad_gon_size,
    holes_share_vertex,
    degree_too_high,
    interior_not_q_valent,
    empty_partition,
    not_two_connected,
    not_spherical,
    // polycycle operations
    not_a_hole,
    not_a_proper_face,
    last_proper_face,
    result_not_two_connected,
    result_violates_axioms,
    degree_overflow,
    hole_collision,
    bad_run,
    size_not_in_r,
    not_open,
    wrong_valence,
    bad_params,
    // families / enumerate
    bad_size,
    unknown_series,
    index_below_start,
    not_elliptic,
    bound_too_small,
    not_in_catalog,
    // io
    parse_error,
    unknown_format_tag,
    validation_error,
    too_large,
    io_error,
};

std::string_view to_string(ErrorKind kind) noexcept;

class PolycycleError : public std::runtime_error {
public:
    PolycycleError(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Wraps a validation failure of a derived object, keeping the inner cause.
class WrappedError : public PolycycleError {
public:
    WrappedError(ErrorKind outer, const PolycycleError& inner)
        : PolycycleError(outer, inner.what()), inner_(inner.kind()) {}

    ErrorKind inner() const noexcept { return inner_; }

private:
    ErrorKind inner_;
};

}  // namespace polycycle
