#include "hopad/type_checks.hpp"

#include <set>
#include <sstream>

namespace hopad {

namespace {

constexpr std::size_t max_examples = 5;

} // namespace

void CheckReport::fail(std::string msg)
{
    ++hard;
    if (hard_examples.size() < max_examples) hard_examples.push_back(std::move(msg));
}

void CheckReport::unwitnessed(std::string msg)
{
    ++soft;
    if (soft_examples.size() < max_examples) soft_examples.push_back(std::move(msg));
}

void CheckReport::merge(const CheckReport& o)
{
    checked += o.checked;
    hard += o.hard;
    soft += o.soft;
    excluded += o.excluded;
    for (const auto& m : o.hard_examples)
        if (hard_examples.size() < max_examples) hard_examples.push_back(m);
    for (const auto& m : o.soft_examples)
        if (soft_examples.size() < max_examples) soft_examples.push_back(m);
}

bool uses_collapse(const Run& run)
{
    for (const auto& s : run.steps())
        if (s.transition.op.kind == OpKind::collapse) return true;
    return false;
}

bool agrees(const TypeSystem& ts, const LineageRun& lr, const Goal& goal)
{
    const Run& run = lr.run();
    if (phi_of_run(ts.monoid(), run) != goal.m) return false;
    if (goal.r < 1 || goal.r > ts.n() || !is_k_return(lr, goal.r)) return false;
    if (run.last().state != goal.q) return false;
    const SpineTyping ft = ts.type_of_spine(run.last().stack, goal.r);
    for (int i = goal.r + 1; i <= ts.n(); ++i)
        if (!is_subset(goal.sigma[static_cast<std::size_t>(i)], ft[i].types())) return false;
    return true;
}

std::vector<Goal> goals_of_return(const TypeSystem& ts, const LineageRun& lr, int r)
{
    const int n = ts.n();
    const Run& run = lr.run();
    const SpineTyping ft = ts.type_of_spine(run.last().stack, r);
    Goal base;
    base.m = phi_of_run(ts.monoid(), run);
    base.r = r;
    base.q = run.last().state;
    base.sigma.resize(static_cast<std::size_t>(n + 1));

    std::vector<IdSet> full(static_cast<std::size_t>(n + 1));
    std::size_t bits = 0;
    for (int i = r + 1; i <= n; ++i) {
        full[static_cast<std::size_t>(i)] = ft[i].types();
        bits += full[static_cast<std::size_t>(i)].size();
    }
    std::vector<Goal> out;
    if (bits > 10) {
        out.push_back(base);
        Goal g = base;
        for (int i = r + 1; i <= n; ++i) g.sigma[static_cast<std::size_t>(i)] = full[static_cast<std::size_t>(i)];
        out.push_back(std::move(g));
        return out;
    }
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        Goal g = base;
        std::size_t bit = 0;
        for (int i = r + 1; i <= n; ++i)
            for (DescId id : full[static_cast<std::size_t>(i)])
                if (mask & (1u << bit++)) g.sigma[static_cast<std::size_t>(i)].push_back(id);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Run> find_agreeing_runs(const TypeSystem& ts, const EnumerationSpace& space, const Goal& goal)
{
    std::vector<Run> out;
    for_each_run(space, [&](const Run& run) {
        LineageRun lr(run);
        if (agrees(ts, lr, goal)) out.push_back(run);
    });
    return out;
}

namespace {

struct Witness {
    MonoidElement m;
    int r;
    StateId q;
    std::vector<Typing> final_pieces; // index = absolute level, used for r+1..n
    bool reads_d = false;
};

bool reads_value(const Run& run, std::uint64_t d)
{
    for (const auto& s : run.steps())
        if (!s.label.is_eps() && s.label.data == DataValue::of(d)) return true;
    return false;
}

bool witness_agrees(const Witness& w, const Goal& g, int n)
{
    if (w.m != g.m || w.r != g.r || w.q != g.q) return false;
    for (int i = g.r + 1; i <= n; ++i)
        if (!is_subset(g.sigma[static_cast<std::size_t>(i)], w.final_pieces[static_cast<std::size_t>(i)].types())) return false;
    return true;
}

bool witness_d_condition(const Witness& w, const Goal& g, int n, std::uint64_t d)
{
    if (w.reads_d) return true;
    for (int i = g.r + 1; i <= n; ++i)
        for (DescId tau : g.sigma[static_cast<std::size_t>(i)])
            if (w.final_pieces[static_cast<std::size_t>(i)].idv_contains(tau, d)) return true;
    return false;
}

bool assumptions_hold(const TypeSystem& ts, const Descriptor& sigma, const SpineTyping& sp)
{
    for (int i = sigma.level + 1; i <= ts.n(); ++i)
        if (!is_subset(sigma.psi[static_cast<std::size_t>(i)], sp[i].types())) return false;
    return true;
}

bool descriptor_d_condition(const TypeSystem& ts, DescId id, const Descriptor& sigma, const SpineTyping& sp, std::uint64_t d)
{
    if (sp[sigma.level].idv_contains(id, d)) return true;
    for (int i = sigma.level + 1; i <= ts.n(); ++i)
        for (DescId tau : sigma.psi[static_cast<std::size_t>(i)])
            if (sp[i].idv_contains(tau, d)) return true;
    return false;
}

std::string describe_goal(const TypeSystem& ts, const Goal& g)
{
    return render_goal(g, ts.store(), ts.names());
}

// Shared driver of the two lemma checks. When `d` is set the check runs
// over normalized runs and adds the important-value clauses.
CheckReport check_lemma(const TypeSystem& ts, const Configuration& config, std::size_t bound, std::optional<std::uint64_t> d)
{
    CheckReport rep;
    const int n = ts.n();
    std::vector<SpineTyping> initial;
    for (int k = 0; k <= n; ++k) initial.push_back(ts.type_of_spine(config.stack, k));

    EnumerationSpace space(ts.automaton(), config);
    space.max_steps = bound;
    space.universe = default_universe(config.stack);
    if (d && std::find(space.universe.begin(), space.universe.end(), *d) == space.universe.end()) space.universe.push_back(*d);
    space.normalized_only = d.has_value();

    std::vector<Witness> witnesses;
    for_each_run(space, [&](const Run& run) {
        if (uses_collapse(run)) {
            ++rep.excluded;
            return;
        }
        LineageRun lr(run);
        for (int r = 1; r <= n; ++r) {
            if (!is_k_return(lr, r)) continue;
            Witness w{phi_of_run(ts.monoid(), run), r, run.last().state, {}, d ? reads_value(run, *d) : false};
            const SpineTyping ft = ts.type_of_spine(run.last().stack, r);
            w.final_pieces.resize(static_cast<std::size_t>(n + 1));
            for (int i = r + 1; i <= n; ++i) w.final_pieces[static_cast<std::size_t>(i)] = ft[i];

            for (const Goal& g : goals_of_return(ts, lr, r)) {
                if (d && !witness_d_condition(w, g, n, *d)) continue;
                for (int k = 0; k < r; ++k) {
                    ++rep.checked;
                    const SpineTyping& sp = initial[static_cast<std::size_t>(k)];
                    bool found = false;
                    for (const auto& [id, idv] : sp[k].idv) {
                        (void)idv;
                        const Descriptor& sigma = ts.store().get(id);
                        if (sigma.ne || sigma.p != config.state || !(sigma.goal == g)) continue;
                        if (!assumptions_hold(ts, sigma, sp)) continue;
                        if (d && !descriptor_d_condition(ts, id, sigma, sp, *d)) continue;
                        found = true;
                        break;
                    }
                    if (!found) {
                        std::ostringstream os;
                        os << "run of length " << run.length() << " agrees with " << describe_goal(ts, g)
                           << " but type(s^" << k << ") has no matching descriptor";
                        if (d) os << " (d=" << *d << ")";
                        rep.fail(os.str());
                    }
                }
            }
            witnesses.push_back(std::move(w));
        }
    });

    for (int k = 0; k < n; ++k) {
        const SpineTyping& sp = initial[static_cast<std::size_t>(k)];
        for (const auto& [id, idv] : sp[k].idv) {
            (void)idv;
            const Descriptor& sigma = ts.store().get(id);
            if (sigma.ne || sigma.p != config.state || !assumptions_hold(ts, sigma, sp)) continue;
            if (d && !descriptor_d_condition(ts, id, sigma, sp, *d)) continue;
            ++rep.checked;
            bool witnessed = false;
            for (const auto& w : witnesses) {
                if (!witness_agrees(w, sigma.goal, n)) continue;
                if (d && !witness_d_condition(w, sigma.goal, n, *d)) continue;
                witnessed = true;
                break;
            }
            if (!witnessed) rep.unwitnessed("descriptor #" + std::to_string(id) + " of type(s^" + std::to_string(k) + ") " +
                                            describe_goal(ts, sigma.goal) + " has no run within bound " + std::to_string(bound));
        }
    }
    return rep;
}

} // namespace

CheckReport check_run2type(const TypeSystem& ts, const Configuration& config, std::size_t bound)
{
    return check_lemma(ts, config, bound, std::nullopt);
}

CheckReport check_idv(const TypeSystem& ts, const Configuration& config, std::size_t bound, std::uint64_t d)
{
    if (d == 0) throw std::invalid_argument("check_idv: d must differ from 0");
    return check_lemma(ts, config, bound, d);
}

} // namespace hopad
