#pragma once

#include "hopad/automaton.hpp"
#include "hopad/run.hpp"
#include "hopad/stack.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hopad {

/// One letter of a data word; the value is always a natural number.
struct DataLetter {
    std::string letter;
    std::uint64_t value = 0;

    bool operator==(const DataLetter&) const = default;
};

using DataWord = std::vector<DataLetter>;

/// Parses whitespace-separated `letter@value` tokens.
DataWord parse_data_word(std::string_view text);
std::string format_data_word(const DataWord& w);

/// Drops the data values, concatenating the letters.
std::string project_word(const DataWord& w);

/// Resolves letters against the automaton alphabet; throws on unknown letters.
InputWord to_input_word(const Automaton& aut, const DataWord& w);
DataWord to_data_word(const Automaton& aut, const InputWord& w);

/// Parses the line-oriented automaton format. Diagnostics carry line numbers.
std::variant<AutomatonDescription, std::vector<Diagnostic>> parse_automaton(std::string_view text);

/// Canonical printing; parse(print(d)) == d up to line numbers.
std::string print_automaton(const AutomatonDescription& desc);

/// Renders `[(X,-) (Y,3;1,4)]` style nested stacks; links follow `;`.
std::string render_stack(const Stack& s, const std::vector<std::string>& symbol_names);

/// Compact form used by the classification table, e.g. `[ab][cd]` for a
/// 2-stack. The outermost brackets are dropped and data is omitted.
std::string render_stack_compact(const Stack& s, const std::vector<std::string>& symbol_names);

/// Parses the `render_stack` syntax for a stack of the given level.
Stack parse_stack(std::string_view text, int level, const std::vector<std::string>& symbol_names);

std::string render_operation(const Operation& op, const std::vector<std::string>& symbol_names);

} // namespace hopad
