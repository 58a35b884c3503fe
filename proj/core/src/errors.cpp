#include "sinkopt/errors.hpp"

namespace sinkopt {

const char* to_string(errc code) noexcept {
    switch (code) {
    case errc::self_loop: return "self_loop";
    case errc::disconnected: return "disconnected";
    case errc::empty_graph: return "empty_graph";
    case errc::malformed_line: return "malformed_line";
    case errc::unknown_label: return "unknown_label";
    case errc::empty_target: return "empty_target";
    case errc::full_target: return "full_target";
    case errc::solver_failure: return "solver_failure";
    case errc::start_inside_target: return "start_inside_target";
    case errc::walk_cap_exceeded: return "walk_cap_exceeded";
    case errc::not_a_cover: return "not_a_cover";
    case errc::degenerate_context: return "degenerate_context";
    case errc::context_incomplete: return "context_incomplete";
    case errc::cap_too_small: return "cap_too_small";
    case errc::too_large: return "too_large";
    case errc::no_starters: return "no_starters";
    case errc::starter_too_large: return "starter_too_large";
    case errc::target_too_small: return "target_too_small";
    case errc::element_in_set: return "element_in_set";
    case errc::zero_greedy_rank: return "zero_greedy_rank";
    case errc::non_positive_eta: return "non_positive_eta";
    case errc::no_valid_pairs: return "no_valid_pairs";
    case errc::construction_failed: return "construction_failed";
    case errc::invalid_argument: return "invalid_argument";
    }
    return "unknown";
}

} // namespace sinkopt
