#pragma once

#include "hopad/automaton.hpp"
#include "hopad/text_format.hpp"

#include <string>
#include <variant>

namespace test_util {

inline hopad::Automaton automaton(const std::string& text)
{
    auto parsed = hopad::parse_automaton(text);
    if (std::holds_alternative<std::vector<hopad::Diagnostic>>(parsed))
        throw std::invalid_argument("test automaton does not parse: " +
                                    hopad::to_string(std::get<std::vector<hopad::Diagnostic>>(parsed).front()));
    return hopad::make_automaton(std::get<hopad::AutomatonDescription>(parsed));
}

/// Level-1 machine with the single transition (q, G, a, q', pop 1).
inline const char* single_pop_text =
    "level 1\n"
    "collapsible false\n"
    "input-alphabet a\n"
    "stack-alphabet G0 G\n"
    "states q q'\n"
    "initial-state q\n"
    "initial-symbol G0\n"
    "accepting q'\n"
    "trans q G in a q' pop 1\n"
    "start-stack [(G0,-) (G,5)]\n";

} // namespace test_util
