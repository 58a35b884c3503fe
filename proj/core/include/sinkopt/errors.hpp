#pragma once

#include <stdexcept>
#include <string>

namespace sinkopt {

// Machine-readable failure codes. The CLI surfaces these verbatim in the
// "error.code" field, so the snake_case names are part of the output format.
enum class errc {
    self_loop,
    disconnected,
    empty_graph,
    malformed_line,
    unknown_label,
    empty_target,
    full_target,
    solver_failure,
    start_inside_target,
    walk_cap_exceeded,
    not_a_cover,
    degenerate_context,
    context_incomplete,
    cap_too_small,
    too_large,
    no_starters,
    starter_too_large,
    target_too_small,
    element_in_set,
    zero_greedy_rank,
    non_positive_eta,
    no_valid_pairs,
    construction_failed,
    invalid_argument,
};

const char* to_string(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return to_string(code_); }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace sinkopt
