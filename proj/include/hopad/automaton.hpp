#pragma once

#include "hopad/stack.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopad {

/// A transition as written by a user, with names instead of ids.
struct TransitionSpec {
    std::string source;
    std::string top;
    std::optional<std::string> letter; ///< nullopt for an epsilon transition
    std::string target;
    OpKind kind = OpKind::pop;
    int level = 1;
    std::string symbol; ///< pushed symbol, push only
    int line = 0;       ///< source line, 0 when built in memory

    bool operator==(const TransitionSpec& o) const
    {
        return source == o.source && top == o.top && letter == o.letter && target == o.target &&
               kind == o.kind && level == o.level && symbol == o.symbol;
    }
};

/// Unvalidated automaton description.
struct AutomatonDescription {
    int level = 1;
    bool collapsible = false;
    std::vector<std::string> input_alphabet;
    std::vector<std::string> stack_alphabet;
    std::vector<std::string> states; ///< optional; inferred from use when empty
    std::string initial_state;
    std::string initial_symbol;
    std::vector<std::string> accepting;
    std::vector<TransitionSpec> transitions;
    std::optional<std::string> start_stack; ///< rendered stack, scenario start
    std::optional<std::string> scenario_word; ///< data word driving the scenario run

    bool operator==(const AutomatonDescription&) const = default;
};

struct Diagnostic {
    std::string rule;
    std::string message;
    int line = 0;
};

std::string to_string(const Diagnostic& d);

struct Transition {
    StateId source = 0;
    SymbolId top = 0;
    std::optional<LetterId> letter;
    StateId target = 0;
    Operation op;
};

/// A validated deterministic n-HOPAD or n-CPAD.
class Automaton {
public:
    int level() const noexcept { return level_; }
    bool collapsible() const noexcept { return collapsible_; }

    const std::vector<std::string>& input_alphabet() const noexcept { return letters_; }
    const std::vector<std::string>& stack_alphabet() const noexcept { return symbols_; }
    const std::vector<std::string>& states() const noexcept { return states_; }

    std::size_t letter_count() const noexcept { return letters_.size(); }
    std::size_t symbol_count() const noexcept { return symbols_.size(); }
    std::size_t state_count() const noexcept { return states_.size(); }

    StateId initial_state() const noexcept { return initial_state_; }
    SymbolId initial_symbol() const noexcept { return initial_symbol_; }
    bool accepting(StateId q) const { return accepting_.at(q); }

    const std::vector<Transition>& transitions() const noexcept { return transitions_; }

    const Transition* eps_transition(StateId q, SymbolId top) const;
    const Transition* letter_transition(StateId q, SymbolId top, LetterId a) const;

    std::optional<LetterId> letter_id(std::string_view name) const;
    std::optional<SymbolId> symbol_id(std::string_view name) const;
    std::optional<StateId> state_id(std::string_view name) const;

    /// Scenario start stack from the `start-stack` directive, if any.
    const std::optional<Stack>& start_stack() const noexcept { return start_stack_; }

    const AutomatonDescription& description() const noexcept { return description_; }

private:
    friend std::variant<Automaton, std::vector<Diagnostic>> validate_automaton(const AutomatonDescription&);

    Automaton() = default;

    std::size_t slot(StateId q, SymbolId a) const { return q * symbols_.size() + a; }

    int level_ = 1;
    bool collapsible_ = false;
    std::vector<std::string> letters_;
    std::vector<std::string> symbols_;
    std::vector<std::string> states_;
    StateId initial_state_ = 0;
    SymbolId initial_symbol_ = 0;
    std::vector<bool> accepting_;
    std::vector<Transition> transitions_;
    std::vector<int> eps_index_;    // slot -> transition index or -1
    std::vector<int> letter_index_; // slot * letters + a -> transition index or -1
    std::optional<Stack> start_stack_;
    AutomatonDescription description_;
};

/// Checks determinism, epsilon exclusivity, name resolution, operation
/// levels and collapse availability. Returns every violation found.
std::variant<Automaton, std::vector<Diagnostic>> validate_automaton(const AutomatonDescription& desc);

/// Convenience wrapper that throws std::invalid_argument listing diagnostics.
Automaton make_automaton(const AutomatonDescription& desc);

} // namespace hopad
