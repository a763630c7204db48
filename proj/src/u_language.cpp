#include "hopad/u_language.hpp"

#include <stdexcept>

namespace hopad {

const char* to_string(UCondition c)
{
    switch (c) {
    case UCondition::none: return "none";
    case UCondition::dollar_count: return "dollar-count";
    case UCondition::bracket_wellformedness: return "bracket-wellformedness";
    case UCondition::suffix_symmetry: return "suffix-symmetry";
    }
    return "?";
}

UMembershipReport in_u(const DataWord& w)
{
    std::size_t dollars = 0;
    std::size_t dollar_pos = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& l = w[i].letter;
        if (l == "$") {
            ++dollars;
            dollar_pos = i;
        } else if (l != "[" && l != "]") {
            throw std::invalid_argument("in_u: letter '" + l + "' is not in {[, ], $}");
        }
    }
    if (dollars != 1) return {false, UCondition::dollar_count};

    long depth = 0;
    for (const auto& l : w) {
        if (l.letter == "[") ++depth;
        if (l.letter == "]" && --depth < 0) return {false, UCondition::bracket_wellformedness};
    }
    if (depth != 0) return {false, UCondition::bracket_wellformedness};

    // Length of the prefix ending at the last unmatched '[' before the dollar.
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < dollar_pos; ++i) {
        if (w[i].letter == "[")
            open.push_back(i);
        else
            open.pop_back();
    }
    const std::size_t p = open.empty() ? 0 : open.back() + 1;
    const std::size_t suffix = w.size() - dollar_pos - 1;
    if (suffix != p) return {false, UCondition::suffix_symmetry};
    for (std::size_t i = 0; i < p; ++i) {
        const auto& a = w[i];
        const auto& b = w[w.size() - 1 - i];
        if (a.value != b.value || a.letter == b.letter) return {false, UCondition::suffix_symmetry};
    }
    return {true, UCondition::none};
}

AutomatonDescription u_recognizer_description()
{
    AutomatonDescription d;
    d.level = 2;
    d.collapsible = true;
    d.input_alphabet = {"[", "]", "$"};
    d.stack_alphabet = {"X", "Y", "[", "]"};
    d.states = {"init", "rec", "o1", "o2", "o3", "c1", "c2", "c3", "mirror", "acc"};
    d.initial_state = "init";
    d.initial_symbol = "X";
    d.accepting = {"acc"};
    auto eps = [&](std::string q, std::string top, std::string q2, OpKind k, int lvl, std::string sym = {}) {
        d.transitions.push_back({std::move(q), std::move(top), std::nullopt, std::move(q2), k, lvl, std::move(sym), 0});
    };
    auto in = [&](std::string q, std::string top, std::string a, std::string q2, OpKind k, int lvl, std::string sym = {}) {
        d.transitions.push_back({std::move(q), std::move(top), std::move(a), std::move(q2), k, lvl, std::move(sym), 0});
    };
    // Set up the bottom 1-stack and the first recording 1-stack.
    eps("init", "X", "rec", OpKind::push, 2, "X");
    // Opening bracket: record it, copy the 1-stack, then count it with Y.
    in("rec", "X", "[", "o1", OpKind::push, 1, "[");
    in("rec", "Y", "[", "o1", OpKind::push, 1, "[");
    eps("o1", "[", "o2", OpKind::push, 2, "[");
    eps("o2", "[", "o3", OpKind::pop, 1);
    eps("o3", "X", "rec", OpKind::push, 1, "Y");
    eps("o3", "Y", "rec", OpKind::push, 1, "Y");
    // Closing bracket: record it, copy the 1-stack, then drop one Y.
    in("rec", "Y", "]", "c1", OpKind::push, 1, "]");
    eps("c1", "]", "c2", OpKind::push, 2, "]");
    eps("c2", "]", "c3", OpKind::pop, 1);
    eps("c3", "Y", "rec", OpKind::pop, 1);
    // Dollar: balanced prefix accepts, otherwise jump back to the last
    // unmatched opening bracket and read the mirrored suffix.
    in("rec", "X", "$", "acc", OpKind::push, 1, "X");
    in("rec", "Y", "$", "mirror", OpKind::collapse, 2);
    in("mirror", "[", "]", "mirror", OpKind::pop, 2);
    in("mirror", "]", "[", "mirror", OpKind::pop, 2);
    eps("mirror", "X", "acc", OpKind::push, 1, "X");
    return d;
}

Automaton build_u_recognizer()
{
    return make_automaton(u_recognizer_description());
}

std::size_t gen_w_length(unsigned k, unsigned n)
{
    std::size_t len = 3;
    for (unsigned i = 0; i < k; ++i) len = n * len + n + 1;
    return len;
}

std::string gen_w(unsigned k, unsigned n, std::size_t max_length)
{
    if (n < 1) throw std::invalid_argument("gen_w: N must be >= 1");
    if (k > 6) throw std::length_error("gen_w: k must be <= 6");
    std::string w = "[][";
    for (unsigned i = 0; i < k; ++i) {
        const std::size_t next = n * w.size() + n + 1;
        if (next > max_length) throw std::length_error("gen_w: word length would exceed " + std::to_string(max_length));
        std::string v;
        v.reserve(next);
        for (unsigned j = 0; j < n; ++j) v += w;
        v.append(n, ']');
        v += '[';
        w = std::move(v);
    }
    return w;
}

DataWord decorate_distinct(std::string_view w)
{
    DataWord out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back({std::string(1, w[i]), i + 1});
    return out;
}

} // namespace hopad
