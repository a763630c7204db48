#include "hopad/run.hpp"

#include <stdexcept>

namespace hopad {

Configuration make_configuration(const Automaton& aut, StateId state, Stack stack)
{
    if (state >= aut.state_count()) throw std::invalid_argument("configuration: unknown state");
    if (stack.level() != aut.level()) throw std::invalid_argument("configuration: stack level differs from automaton level");
    if (!well_formed(stack)) throw std::invalid_argument("configuration: stack is not well formed");
    return Configuration{state, std::move(stack)};
}

Configuration initial_configuration(const Automaton& aut)
{
    return Configuration{aut.initial_state(), initial_stack(aut.level(), aut.initial_symbol(), aut.collapsible())};
}

Configuration start_configuration(const Automaton& aut)
{
    if (aut.start_stack()) return make_configuration(aut, aut.initial_state(), *aut.start_stack());
    return initial_configuration(aut);
}

const char* to_string(StuckReason r)
{
    switch (r) {
    case StuckReason::none: return "none";
    case StuckReason::no_transition: return "no-transition";
    case StuckReason::no_input: return "no-input";
    case StuckReason::data_mismatch: return "data-mismatch";
    case StuckReason::ill_formed: return "ill-formed";
    case StuckReason::collapse_unavailable: return "collapse-unavailable";
    }
    return "?";
}

StepResult fire(const Configuration& config, const Transition& t, const StepLabel& label)
{
    StepResult res;
    res.label = label;
    res.transition = t;
    if (t.op.kind == OpKind::pop && !label.is_eps() && label.data != top_atom(config.stack).data) {
        res.reason = StuckReason::data_mismatch;
        return res;
    }
    OpResult out = apply_operation(config.stack, t.op, label.data);
    if (!out) {
        res.reason = out.error == OpError::collapse_unavailable ? StuckReason::collapse_unavailable : StuckReason::ill_formed;
        return res;
    }
    res.next = Configuration{t.target, std::move(*out.stack)};
    return res;
}

StepResult step(const Automaton& aut, const Configuration& config, const std::optional<InputLetter>& input)
{
    const SymbolId top = top_atom(config.stack).symbol;
    if (const Transition* t = aut.eps_transition(config.state, top)) return fire(config, *t, StepLabel{});
    StepResult res;
    if (!input) {
        res.reason = StuckReason::no_input;
        return res;
    }
    const Transition* t = input->letter < aut.letter_count() ? aut.letter_transition(config.state, top, input->letter) : nullptr;
    if (!t) {
        res.label = StepLabel{input->letter, DataValue::of(input->value)};
        res.reason = StuckReason::no_transition;
        return res;
    }
    return fire(config, *t, StepLabel{input->letter, DataValue::of(input->value)});
}

void Run::append(Step s, Configuration next)
{
    steps_.push_back(std::move(s));
    configs_.push_back(std::move(next));
}

void Run::truncate(std::size_t length)
{
    if (length > steps_.size()) throw std::out_of_range("Run::truncate");
    steps_.resize(length);
    configs_.resize(length + 1, configs_.front());
}

Run Run::subrun(std::size_t i, std::size_t j) const
{
    if (i > j || j > length()) throw std::out_of_range("Run::subrun: bad interval");
    Run r(configs_[i]);
    r.steps_.assign(steps_.begin() + static_cast<std::ptrdiff_t>(i), steps_.begin() + static_cast<std::ptrdiff_t>(j));
    r.configs_.assign(configs_.begin() + static_cast<std::ptrdiff_t>(i), configs_.begin() + static_cast<std::ptrdiff_t>(j + 1));
    return r;
}

Run Run::then(const Run& other) const
{
    if (!(last() == other.first())) throw std::invalid_argument("Run::then: runs are not composable");
    Run r = *this;
    for (std::size_t i = 0; i < other.length(); ++i) r.append(other.steps_[i], other.configs_[i + 1]);
    return r;
}

InputWord Run::read_word() const
{
    InputWord w;
    for (const auto& s : steps_)
        if (!s.label.is_eps()) w.push_back({*s.label.letter, s.label.data.value()});
    return w;
}

bool Run::operator==(const Run& o) const
{
    if (configs_ != o.configs_ || steps_.size() != o.steps_.size()) return false;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        const auto& a = steps_[i];
        const auto& b = o.steps_[i];
        if (!(a.label == b.label) || a.transition.op != b.transition.op || a.transition.target != b.transition.target) return false;
    }
    return true;
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

Outcome execute_word(const Automaton& aut, const InputWord& word, std::size_t eps_budget,
                     const std::optional<Configuration>& start)
{
    Outcome out{Verdict::rejected, Run(start ? *start : initial_configuration(aut)), {}, 0};
    std::size_t pos = 0;
    std::size_t eps_run = 0;
    for (;;) {
        const Configuration& cur = out.run.last();
        if (pos == word.size() && aut.accepting(cur.state)) {
            out.verdict = Verdict::accepted;
            break;
        }
        const SymbolId top = top_atom(cur.stack).symbol;
        if (aut.eps_transition(cur.state, top) && eps_run + 1 > eps_budget) {
            out.verdict = Verdict::budget_exhausted;
            out.reason = "more than " + std::to_string(eps_budget) + " consecutive epsilon steps";
            break;
        }
        std::optional<InputLetter> next;
        if (pos < word.size()) next = word[pos];
        StepResult r = step(aut, cur, next);
        if (!r.ok()) {
            out.verdict = Verdict::rejected;
            out.reason = r.reason == StuckReason::no_input ? "input exhausted in a non-accepting state"
                                                            : std::string("stuck: ") + to_string(r.reason);
            break;
        }
        if (r.label.is_eps()) {
            ++eps_run;
        } else {
            eps_run = 0;
            ++pos;
        }
        out.run.append(Step{r.label, *r.transition}, std::move(*r.next));
    }
    out.consumed = pos;
    return out;
}

bool is_normalized(const Run& run)
{
    for (const auto& s : run.steps())
        if (!s.label.is_eps() && s.transition.op.kind == OpKind::push && s.label.data != DataValue::of(0)) return false;
    return true;
}

} // namespace hopad
