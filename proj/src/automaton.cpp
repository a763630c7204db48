#include "hopad/automaton.hpp"
#include "hopad/text_format.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopad {

std::string to_string(const Diagnostic& d)
{
    std::ostringstream os;
    if (d.line > 0) os << "line " << d.line << ": ";
    os << d.rule << ": " << d.message;
    return os.str();
}

const Transition* Automaton::eps_transition(StateId q, SymbolId top) const
{
    int idx = eps_index_[slot(q, top)];
    return idx < 0 ? nullptr : &transitions_[static_cast<std::size_t>(idx)];
}

const Transition* Automaton::letter_transition(StateId q, SymbolId top, LetterId a) const
{
    int idx = letter_index_[slot(q, top) * letters_.size() + a];
    return idx < 0 ? nullptr : &transitions_[static_cast<std::size_t>(idx)];
}

namespace {

template <class Id>
std::optional<Id> find_name(const std::vector<std::string>& names, std::string_view name)
{
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<Id>(it - names.begin());
}

std::string describe(const TransitionSpec& t)
{
    std::ostringstream os;
    os << "(" << t.source << "," << t.top << "," << (t.letter ? *t.letter : std::string("eps")) << ")";
    return os.str();
}

} // namespace

std::optional<LetterId> Automaton::letter_id(std::string_view name) const { return find_name<LetterId>(letters_, name); }
std::optional<SymbolId> Automaton::symbol_id(std::string_view name) const { return find_name<SymbolId>(symbols_, name); }
std::optional<StateId> Automaton::state_id(std::string_view name) const { return find_name<StateId>(states_, name); }

std::variant<Automaton, std::vector<Diagnostic>> validate_automaton(const AutomatonDescription& desc)
{
    std::vector<Diagnostic> diags;
    auto fail = [&](std::string rule, std::string msg, int line = 0) {
        diags.push_back({std::move(rule), std::move(msg), line});
    };

    if (desc.level < 1) fail("level", "level must be >= 1");

    auto check_unique = [&](const std::vector<std::string>& names, const char* what) {
        std::vector<std::string> sorted = names;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) fail("duplicate-name", std::string(what) + " '" + *dup + "' declared twice");
    };
    check_unique(desc.input_alphabet, "letter");
    check_unique(desc.stack_alphabet, "symbol");
    check_unique(desc.states, "state");
    if (desc.stack_alphabet.empty()) fail("empty-alphabet", "stack alphabet is empty");

    Automaton aut;
    aut.level_ = desc.level;
    aut.collapsible_ = desc.collapsible;
    aut.letters_ = desc.input_alphabet;
    aut.symbols_ = desc.stack_alphabet;
    aut.description_ = desc;

    // States: declared, or inferred in order of first use.
    const bool declared_states = !desc.states.empty();
    aut.states_ = desc.states;
    auto state_ref = [&](const std::string& name, int line) -> std::optional<StateId> {
        if (auto id = find_name<StateId>(aut.states_, name)) return id;
        if (declared_states) {
            fail("dangling-state", "state '" + name + "' is not declared", line);
            return std::nullopt;
        }
        aut.states_.push_back(name);
        return static_cast<StateId>(aut.states_.size() - 1);
    };

    if (desc.initial_state.empty()) fail("missing-initial-state", "no initial-state directive");
    auto init_state = desc.initial_state.empty() ? std::nullopt : state_ref(desc.initial_state, 0);
    std::vector<StateId> accepting;
    for (const auto& q : desc.accepting)
        if (auto id = state_ref(q, 0)) accepting.push_back(*id);

    auto init_symbol = find_name<SymbolId>(aut.symbols_, desc.initial_symbol);
    if (!init_symbol) fail("dangling-symbol", "initial symbol '" + desc.initial_symbol + "' is not in the stack alphabet");

    for (const auto& t : desc.transitions) {
        Transition tr;
        bool ok = true;
        auto src = state_ref(t.source, t.line);
        auto dst = state_ref(t.target, t.line);
        auto top = find_name<SymbolId>(aut.symbols_, t.top);
        if (!top) {
            fail("dangling-symbol", "symbol '" + t.top + "' in transition " + describe(t) + " is not declared", t.line);
            ok = false;
        }
        if (t.letter) {
            auto a = find_name<LetterId>(aut.letters_, *t.letter);
            if (!a) {
                fail("dangling-letter", "letter '" + *t.letter + "' in transition " + describe(t) + " is not declared", t.line);
                ok = false;
            } else {
                tr.letter = *a;
            }
        }
        if (t.level < 1 || t.level > desc.level) {
            fail("level-out-of-range", "operation level " + std::to_string(t.level) + " in transition " + describe(t) +
                                           " outside [1," + std::to_string(desc.level) + "]", t.line);
            ok = false;
        }
        tr.op.kind = t.kind;
        tr.op.level = t.level;
        if (t.kind == OpKind::push) {
            auto beta = find_name<SymbolId>(aut.symbols_, t.symbol);
            if (!beta) {
                fail("dangling-symbol", "pushed symbol '" + t.symbol + "' in transition " + describe(t) + " is not declared", t.line);
                ok = false;
            } else {
                tr.op.symbol = *beta;
            }
        }
        if (t.kind == OpKind::collapse && !desc.collapsible) {
            fail("collapse-unavailable", "collapse in transition " + describe(t) + " of a non-collapsible automaton", t.line);
            ok = false;
        }
        if (!src || !dst) ok = false;
        if (!ok) continue;
        tr.source = *src;
        tr.target = *dst;
        tr.top = *top;
        aut.transitions_.push_back(tr);
    }

    if (!diags.empty()) return diags;

    const std::size_t slots = aut.states_.size() * aut.symbols_.size();
    aut.eps_index_.assign(slots, -1);
    aut.letter_index_.assign(slots * aut.letters_.size(), -1);
    std::vector<bool> has_letter(slots, false);
    std::vector<int> spec_line(aut.transitions_.size());
    for (std::size_t i = 0; i < aut.transitions_.size(); ++i) spec_line[i] = desc.transitions[i].line;

    for (std::size_t i = 0; i < aut.transitions_.size(); ++i) {
        const Transition& t = aut.transitions_[i];
        const TransitionSpec& spec = desc.transitions[i];
        std::size_t s = aut.slot(t.source, t.top);
        int* cell = t.letter ? &aut.letter_index_[s * aut.letters_.size() + *t.letter] : &aut.eps_index_[s];
        if (*cell >= 0)
            fail("determinism-conflict", "determinism conflict: two transitions from " + describe(spec), spec.line);
        else
            *cell = static_cast<int>(i);
        if (t.letter) has_letter[s] = true;
    }
    for (std::size_t s = 0; s < slots; ++s) {
        if (aut.eps_index_[s] >= 0 && has_letter[s]) {
            const auto& t = aut.transitions_[static_cast<std::size_t>(aut.eps_index_[s])];
            fail("epsilon-conflict", "epsilon-conflict at (" + aut.states_[t.source] + "," + aut.symbols_[t.top] + ")",
                 spec_line[static_cast<std::size_t>(aut.eps_index_[s])]);
        }
    }

    aut.initial_state_ = *init_state;
    aut.initial_symbol_ = *init_symbol;
    aut.accepting_.assign(aut.states_.size(), false);
    for (auto q : accepting) aut.accepting_[q] = true;

    if (desc.start_stack) {
        try {
            Stack s = parse_stack(*desc.start_stack, desc.level, aut.symbols_);
            if (!well_formed(s)) fail("start-stack", "start stack is not well formed");
            bool links_ok = true;
            std::vector<const Stack*> todo{&s};
            while (!todo.empty()) {
                const Stack* cur = todo.back();
                todo.pop_back();
                if (cur->is_atom()) {
                    const auto& links = cur->as_atom().links;
                    if (desc.collapsible ? links.size() != static_cast<std::size_t>(desc.level) : !links.empty()) links_ok = false;
                } else {
                    for (const auto& c : cur->items()) todo.push_back(&c);
                }
            }
            if (!links_ok) fail("start-stack", "atom links must be present exactly when the automaton is collapsible");
            aut.start_stack_ = s;
        } catch (const std::exception& e) {
            fail("start-stack", e.what());
        }
    }

    if (desc.scenario_word) {
        try {
            for (const auto& l : parse_data_word(*desc.scenario_word))
                if (std::find(aut.letters_.begin(), aut.letters_.end(), l.letter) == aut.letters_.end())
                    fail("scenario-word", "letter '" + l.letter + "' is not in the input alphabet");
        } catch (const std::exception& e) {
            fail("scenario-word", e.what());
        }
    }

    if (!diags.empty()) return diags;
    return aut;
}

Automaton make_automaton(const AutomatonDescription& desc)
{
    auto result = validate_automaton(desc);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&result)) {
        std::string msg = "invalid automaton:";
        for (const auto& d : *diags) msg += "\n  " + to_string(d);
        throw std::invalid_argument(msg);
    }
    return std::get<Automaton>(std::move(result));
}

} // namespace hopad
