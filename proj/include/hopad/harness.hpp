#pragma once

#include "hopad/automaton.hpp"
#include "hopad/lineage.hpp"
#include "hopad/monoid.hpp"
#include "hopad/run.hpp"
#include "hopad/type_checks.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hopad {

/// A corpus automaton with the monoid used to type it and the seeded start
/// configurations the suites enumerate from.
struct CorpusMachine {
    std::string name;
    Automaton automaton;
    FiniteMonoid monoid;
    std::vector<Configuration> starts;
};

/// (a) level 1: q --(G, a)--> q' with pop 1, started from [(G0,-) (G,5)].
CorpusMachine single_pop_machine();
/// (b) level 2 machine realizing the operations of the classification
/// example from the stack [[(a,1) (b,2)] [(c,3) (d,4)]].
CorpusMachine table1_machine();
/// (c) the U recognizer, seeded with configurations reached on prefixes.
CorpusMachine u_machine();
/// (d) seeded random deterministic level-2 machines over {[, ], $}.
std::vector<CorpusMachine> random_machines(std::uint64_t seed, std::size_t count);

/// Text of the classification example machine in the automaton format.
std::string table1_machine_text();
/// The word driving the classification example.
std::string table1_word();
/// The classification example run R[0..6].
Run table1_run();

/// Rows of the form `j | stack | {..} | ...` with columns k-upper for
/// k = 0..n-1 followed by k-return for k = 1..n; empty sets print as ∅.
std::vector<std::string> render_classification(const LineageRun& lr, const std::vector<std::string>& symbol_names);
std::string classification_header(int n);
/// Table 1 as printed by render_classification.
std::vector<std::string> expected_table1();

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t lemma_bound = 6;        ///< run2type, idv, classifier-equivalence
    std::size_t transfer_bound = 5;     ///< origin, idv-upper
    std::size_t random_machine_count = 50;
    std::size_t typed_random_count = 20; ///< random machines used by the lemma suites
    std::size_t u_exhaustive_length = 6;
    std::size_t u_random_words = 10000;
    std::size_t u_random_length = 20;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    CheckReport report;
    std::vector<std::pair<std::string, std::string>> stats; ///< printed in order
};

const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

struct SuiteReport {
    std::vector<SuiteResult> results;
    bool hard_failure() const;
};

/// Runs the selected suites in the given order (all when empty).
SuiteReport run_suites(const std::vector<std::string>& selection, const SuiteOptions& opts);

/// Line-oriented report: one `suite=<name> status=<PASS|FAIL> ...` line
/// per suite followed by indented example lines.
std::string render_report(const SuiteReport& report);
std::string render_result(const SuiteResult& r);

} // namespace hopad
