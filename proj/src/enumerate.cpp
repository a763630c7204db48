#include "hopad/enumerate.hpp"

#include <algorithm>

namespace hopad {

std::vector<std::uint64_t> default_universe(const Stack& s)
{
    std::vector<std::uint64_t> u{0, 1, 2, 3};
    for (auto v : data_values(s)) u.push_back(v);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    u.push_back(u.back() + 1);
    return u;
}

void validate_space(const EnumerationSpace& space)
{
    if (!space.automaton) throw std::invalid_argument("enumeration: no automaton");
    const auto& u = space.universe;
    if (std::find(u.begin(), u.end(), 0) == u.end()) throw std::invalid_argument("enumeration: universe must contain 0");
    for (auto v : data_values(space.start.stack))
        if (std::find(u.begin(), u.end(), v) == u.end())
            throw std::invalid_argument("enumeration: start stack value " + std::to_string(v) + " missing from the universe");
}

namespace {

class Enumerator {
public:
    Enumerator(const EnumerationSpace& space, const std::function<void(const Run&)>& visit)
        : space_(space), aut_(*space.automaton), visit_(visit), run_(space.start)
    {
    }

    EnumerationStats go()
    {
        dfs();
        return stats_;
    }

private:
    void emit()
    {
        if (++stats_.runs > space_.run_cap)
            throw EnumerationLimit("enumeration exceeded the cap of " + std::to_string(space_.run_cap) + " runs");
        visit_(run_);
    }

    void extend(const Transition& t, const StepLabel& label)
    {
        StepResult r = fire(run_.last(), t, label);
        if (!r.ok()) return;
        if (run_.length() == space_.max_steps) {
            stats_.truncated = true;
            return;
        }
        run_.append(Step{label, t}, std::move(*r.next));
        dfs();
        run_.truncate(run_.length() - 1);
    }

    void dfs()
    {
        emit();
        // Copies: extending the run may reallocate its configurations.
        const StateId state = run_.last().state;
        const SymbolId top_symbol = top_atom(run_.last().stack).symbol;
        const DataValue top_data = top_atom(run_.last().stack).data;
        if (const Transition* t = aut_.eps_transition(state, top_symbol)) {
            extend(*t, StepLabel{});
            return;
        }
        for (LetterId a = 0; a < aut_.letter_count(); ++a) {
            const Transition* t = aut_.letter_transition(state, top_symbol, a);
            if (!t) continue;
            const Transition tr = *t;
            switch (tr.op.kind) {
            case OpKind::pop:
                if (top_data.has_value()) extend(tr, StepLabel{a, top_data});
                break;
            case OpKind::push:
                if (space_.normalized_only) {
                    extend(tr, StepLabel{a, DataValue::of(0)});
                    break;
                }
                [[fallthrough]];
            case OpKind::collapse:
                for (auto v : space_.universe) extend(tr, StepLabel{a, DataValue::of(v)});
                break;
            }
        }
    }

    const EnumerationSpace& space_;
    const Automaton& aut_;
    const std::function<void(const Run&)>& visit_;
    Run run_;
    EnumerationStats stats_;
};

} // namespace

EnumerationStats for_each_run(const EnumerationSpace& space, const std::function<void(const Run&)>& visit)
{
    validate_space(space);
    return Enumerator(space, visit).go();
}

std::vector<Run> enumerate_runs(const EnumerationSpace& space)
{
    std::vector<Run> out;
    for_each_run(space, [&](const Run& r) { out.push_back(r); });
    return out;
}

} // namespace hopad
