#pragma once

#include "hopad/automaton.hpp"
#include "hopad/stack.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hopad {

/// An input letter resolved against an automaton's alphabet.
struct InputLetter {
    LetterId letter = 0;
    std::uint64_t value = 0;

    bool operator==(const InputLetter&) const = default;
};

using InputWord = std::vector<InputLetter>;

struct Configuration {
    StateId state = 0;
    Stack stack;

    bool operator==(const Configuration&) const = default;
};

/// Builds a configuration, throwing std::invalid_argument if the stack is
/// not well formed or has the wrong level.
Configuration make_configuration(const Automaton& aut, StateId state, Stack stack);

Configuration initial_configuration(const Automaton& aut);

/// The scenario start configuration: the `start-stack` directive if present,
/// the initial configuration otherwise.
Configuration start_configuration(const Automaton& aut);

/// Label of a step: a letter with its data value, or epsilon with NoData.
struct StepLabel {
    std::optional<LetterId> letter;
    DataValue data;

    bool is_eps() const { return !letter.has_value(); }
    bool operator==(const StepLabel&) const = default;
};

enum class StuckReason : std::uint8_t { none, no_transition, no_input, data_mismatch, ill_formed, collapse_unavailable };

const char* to_string(StuckReason r);

struct StepResult {
    std::optional<Configuration> next;
    StepLabel label;
    std::optional<Transition> transition; ///< the transition that fired or was attempted
    StuckReason reason = StuckReason::none;

    bool ok() const { return next.has_value(); }
};

/// One deterministic step. Epsilon transitions take priority and leave the
/// input untouched; otherwise `input` is consumed by a letter transition.
/// A letter-reading pop requires the input value to equal the top atom's data.
StepResult step(const Automaton& aut, const Configuration& config, const std::optional<InputLetter>& input);

/// Fires a specific transition with the given label. Used by enumeration,
/// which chooses the data value of letter-reading pushes itself.
StepResult fire(const Configuration& config, const Transition& t, const StepLabel& label);

struct Step {
    StepLabel label;
    Transition transition;
};

/// A finite run c_0 -> c_1 -> ... -> c_m. Runs share stacks structurally, so
/// copying and taking subruns is cheap.
class Run {
public:
    explicit Run(Configuration start) : configs_{std::move(start)} {}

    std::size_t length() const noexcept { return steps_.size(); }
    const Configuration& at(std::size_t i) const { return configs_.at(i); }
    const Configuration& first() const { return configs_.front(); }
    const Configuration& last() const { return configs_.back(); }
    const Step& step_at(std::size_t i) const { return steps_.at(i); } ///< step from c_i to c_{i+1}
    const std::vector<Step>& steps() const noexcept { return steps_; }
    const std::vector<Configuration>& configurations() const noexcept { return configs_; }

    void append(Step s, Configuration next);
    void truncate(std::size_t length);

    /// R[i..j], 0 <= i <= j <= length().
    Run subrun(std::size_t i, std::size_t j) const;

    /// Composition; the last configuration of *this must equal other's first.
    Run then(const Run& other) const;

    /// Labels of non-epsilon steps.
    InputWord read_word() const;

    bool operator==(const Run&) const;

private:
    std::vector<Configuration> configs_;
    std::vector<Step> steps_;
};

enum class Verdict : std::uint8_t { accepted, rejected, budget_exhausted };

const char* to_string(Verdict v);

struct Outcome {
    Verdict verdict = Verdict::rejected;
    Run run;
    std::string reason; ///< empty when accepted
    std::size_t consumed = 0;

    bool accepted() const { return verdict == Verdict::accepted; }
};

constexpr std::size_t default_eps_budget = 10000;

/// Runs the automaton on `word` from `start` (the initial configuration by
/// default). The word is accepted when an accepting state is reached after
/// the whole word is consumed; trailing epsilon steps are allowed.
Outcome execute_word(const Automaton& aut, const InputWord& word, std::size_t eps_budget = default_eps_budget,
                     const std::optional<Configuration>& start = std::nullopt);

/// True when every letter-reading push of the run reads value 0.
bool is_normalized(const Run& run);

} // namespace hopad
