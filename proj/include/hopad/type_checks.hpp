#pragma once

#include "hopad/enumerate.hpp"
#include "hopad/lineage.hpp"
#include "hopad/types.hpp"

#include <string>
#include <vector>

namespace hopad {

/// Outcome of a bounded check. Hard failures refute a property; soft items
/// are claims that could not be witnessed within the bound.
struct CheckReport {
    std::size_t checked = 0;
    std::size_t hard = 0;
    std::size_t soft = 0;
    std::size_t excluded = 0; ///< runs outside the model (collapse) or failing hypotheses
    std::vector<std::string> hard_examples;
    std::vector<std::string> soft_examples;

    void fail(std::string msg);
    void unwitnessed(std::string msg);
    void merge(const CheckReport& o);
};

/// phi(R) = m, R is an r-return, R ends in state q, and Sigma^i is contained
/// in the type of the i-th final spine piece for r < i <= n.
bool agrees(const TypeSystem& ts, const LineageRun& lr, const Goal& goal);

/// Goals a given r-return agrees with: every choice of Sigma^i inside the
/// final piece types when there are at most 1024 choices, otherwise the
/// all-empty and the full choice.
std::vector<Goal> goals_of_return(const TypeSystem& ts, const LineageRun& lr, int r);

/// Runs filtered by agreement with a goal.
std::vector<Run> find_agreeing_runs(const TypeSystem& ts, const EnumerationSpace& space, const Goal& goal);

/// The run-to-type lemma from `config` for every k: each enumerated return
/// agreeing with a goal must be matched by a descriptor in the type of s^k
/// (hard), and each such descriptor should be witnessed by an enumerated
/// run (soft).
CheckReport check_run2type(const TypeSystem& ts, const Configuration& config, std::size_t bound);

/// The important-data-value lemma for value d != 0 over normalized runs.
CheckReport check_idv(const TypeSystem& ts, const Configuration& config, std::size_t bound, std::uint64_t d);

/// True when some step of the run is a collapse.
bool uses_collapse(const Run& run);

} // namespace hopad
