#include "polycycle/error.hpp"

namespace polycycle {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::non_involutive_alpha: return "NonInvolutiveAlpha";
        case ErrorKind::disconnected: return "Disconnected";
        case ErrorKind::loop_edge: return "LoopEdge";
        case ErrorKind::bad_gon_size: return "BadGonSize";
        case ErrorKind::holes_share_vertex: return "HolesShareVertex";
        case ErrorKind::degree_too_high: return "DegreeTooHigh";
        case ErrorKind::interior_not_q_valent: return "InteriorNotQValent";
        case ErrorKind::empty_partition: return "EmptyPartition";
        case ErrorKind::not_two_connected: return "NotTwoConnected";
        case ErrorKind::not_spherical: return "NotSpherical";
        case ErrorKind::not_a_hole: return "NotAHole";
        case ErrorKind::not_a_proper_face: return "NotAProperFace";
        case ErrorKind::last_proper_face: return "LastProperFace";
        case ErrorKind::result_not_two_connected: return "ResultNotTwoConnected";
        case ErrorKind::result_violates_axioms: return "ResultViolatesAxioms";
        case ErrorKind::degree_overflow: return "DegreeOverflow";
        case ErrorKind::hole_collision: return "HoleCollision";
        case ErrorKind::bad_run: return "BadRun";
        case ErrorKind::size_not_in_r: return "SizeNotInR";
        case ErrorKind::not_open: return "NotOpen";
        case ErrorKind::wrong_valence: return "WrongValence";
        case ErrorKind::bad_params: return "BadParams";
        case ErrorKind::bad_size: return "BadSize";
        case ErrorKind::unknown_series: return "UnknownSeries";
        case ErrorKind::index_below_start: return "IndexBelowStart";
        case ErrorKind::not_elliptic: return "NotElliptic";
        case ErrorKind::bound_too_small: return "BoundTooSmall";
        case ErrorKind::not_in_catalog: return "NotInCatalog";
        case ErrorKind::parse_error: return "ParseError";
        case ErrorKind::unknown_format_tag: return "UnknownFormatTag";
        case ErrorKind::validation_error: return "ValidationError";
        case ErrorKind::too_large: return "TooLarge";
        case ErrorKind::io_error: return "IoError";
    }
    return "Unknown";
}

}  // namespace polycycle
