#pragma once

#include "hopad/automaton.hpp"
#include "hopad/run.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hopad {

struct EnumerationSpace {
    EnumerationSpace(const Automaton& aut, Configuration from) : automaton(&aut), start(std::move(from)) {}

    const Automaton* automaton = nullptr;
    Configuration start;
    std::size_t max_steps = 4;
    std::vector<std::uint64_t> universe{0, 1, 2, 3}; ///< must contain 0 and every value of the start stack
    bool normalized_only = false;
    std::size_t run_cap = 2'000'000;
};

/// Thrown when enumeration would exceed `run_cap` runs.
class EnumerationLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationStats {
    std::size_t runs = 0;
    bool truncated = false; ///< some run of maximal length could be extended
};

/// Calls `visit` on every run of length <= max_steps from the start
/// configuration (every prefix is a run of its own). Epsilon steps are
/// forced; a letter-reading pop reads the top value; letter-reading pushes
/// and collapses branch over the universe ({0} for pushes when normalized).
EnumerationStats for_each_run(const EnumerationSpace& space, const std::function<void(const Run&)>& visit);

std::vector<Run> enumerate_runs(const EnumerationSpace& space);

/// {0, 1, 2, 3}, the values stored in `s`, and one value not among them.
std::vector<std::uint64_t> default_universe(const Stack& s);

/// Checks the space invariants; throws std::invalid_argument.
void validate_space(const EnumerationSpace& space);

} // namespace hopad
