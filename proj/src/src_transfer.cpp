#include "hopad/src_transfer.hpp"
#include "hopad/decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace hopad {

namespace {

class SrcComputer {
public:
    SrcComputer(const TypeSystem& ts, const LineageRun& lr, int k, SrcResult& out)
        : ts_(ts), lr_(lr), k_(k), n_(ts.n()), out_(out), effects_(step_effects(lr.run()))
    {
    }

    std::vector<IdSet> compute(std::size_t i, std::size_t j, const std::vector<IdSet>& sigma, int depth)
    {
        const Run& run = lr_.run();
        const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
        auto note = [&](const std::string& what) {
            out_.provenance.push_back(indent + what + " R[" + std::to_string(i) + ".." + std::to_string(j) + "]");
        };

        bool low = true;
        for (std::size_t t = i; t < j && low; ++t) low = effects_[t].level <= k_;
        if (low) {
            note("case 1");
            return sigma;
        }

        const SpineTyping sp = ts_.type_of_spine(run.at(i).stack, k_);
        const Operation& first = run.step_at(i).transition.op;
        const bool high_push = first.kind == OpKind::push && first.level >= k_ + 1;
        const int r = first.level;

        if (high_push && j == i + 1) {
            note("case 2 push^" + std::to_string(r));
            std::vector<IdSet> src(static_cast<std::size_t>(n_ + 1));
            for (int l = k_ + 1; l <= n_; ++l)
                if (l != r) src[static_cast<std::size_t>(l)] = sigma[static_cast<std::size_t>(l)];
            for (DescId s : sigma[static_cast<std::size_t>(r)]) back_propagate(s, r, sp, src);
            return src;
        }

        if (high_push && is_k_return(lr_, i + 1, j, r)) {
            note("case 3 push^" + std::to_string(r));
            std::vector<IdSet> src(static_cast<std::size_t>(n_ + 1));
            for (int l = k_ + 1; l <= r; ++l) src[static_cast<std::size_t>(l)] = sigma[static_cast<std::size_t>(l)];

            Goal rho_hat;
            rho_hat.m = phi_of_run(ts_.monoid(), run.subrun(i + 1, j));
            rho_hat.r = r;
            rho_hat.sigma.resize(static_cast<std::size_t>(n_ + 1));
            for (int l = r + 1; l <= n_; ++l) rho_hat.sigma[static_cast<std::size_t>(l)] = sigma[static_cast<std::size_t>(l)];
            rho_hat.q = run.at(j).state;

            const StateId q1 = run.at(i + 1).state;
            const Typing top_after = ts_.type_of(topmost(run.at(i + 1).stack, k_));
            const IdSet upper_r = ts_.type_of(topmost(run.at(i).stack, r)).types();
            for (const auto& [rho_id, idv] : top_after.idv) {
                (void)idv;
                const Descriptor& rho = ts_.store().get(rho_id);
                if (rho.ne || rho.p != q1 || !(rho.goal == rho_hat)) continue;
                bool ok = true;
                for (int l = k_ + 1; l <= n_ && ok; ++l) {
                    const IdSet& phi = rho.psi[static_cast<std::size_t>(l)];
                    ok = l == r ? is_subset(phi, upper_r) : is_subset(phi, sp[l].types());
                }
                if (!ok) continue;
                for (int l = k_ + 1; l <= n_; ++l)
                    if (l != r)
                        src[static_cast<std::size_t>(l)] = set_union(src[static_cast<std::size_t>(l)], rho.psi[static_cast<std::size_t>(l)]);
                for (DescId lambda : rho.psi[static_cast<std::size_t>(r)]) back_propagate(lambda, r, sp, src);
            }
            return src;
        }

        for (std::size_t m = i + 1; m < j; ++m) {
            if (is_k_upper(lr_, i, m, k_) && is_k_upper(lr_, m, j, k_)) {
                note("case 4 split " + std::to_string(m));
                std::vector<IdSet> tail = compute(m, j, sigma, depth + 1);
                return compute(i, m, tail, depth + 1);
            }
        }
        throw std::invalid_argument("compute_src: no case of the upper-run characterization applies");
    }

private:
    // Adds Psi^l (k < l <= r) of every composer (Psi^r, ..., Psi^k; {s})
    // whose slots are contained in the initial piece types.
    void back_propagate(DescId s, int r, const SpineTyping& sp, std::vector<IdSet>& src)
    {
        if (ts_.store().is_ne(s)) return;
        for (const auto& [cand, idv] : sp[k_].idv) {
            (void)idv;
            if (!ts_.store().projectable(cand, r)) continue;
            auto proj = ts_.store().find_projection(cand, r);
            if (!proj || *proj != s) continue;
            const Descriptor& c = ts_.store().get(cand);
            bool ok = true;
            for (int l = k_ + 1; l <= r && ok; ++l) ok = is_subset(c.psi[static_cast<std::size_t>(l)], sp[l].types());
            if (!ok) continue;
            for (int l = k_ + 1; l <= r; ++l)
                src[static_cast<std::size_t>(l)] = set_union(src[static_cast<std::size_t>(l)], c.psi[static_cast<std::size_t>(l)]);
        }
    }

    const TypeSystem& ts_;
    const LineageRun& lr_;
    int k_;
    int n_;
    SrcResult& out_;
    std::vector<Effect> effects_;
};

std::vector<IdSet> normalize_sigma(const std::vector<IdSet>& sigma, int n)
{
    std::vector<IdSet> out(static_cast<std::size_t>(n + 1));
    for (std::size_t l = 0; l < sigma.size() && l < out.size(); ++l) out[l] = make_set(sigma[l]);
    return out;
}

bool contains_d(const SpineTyping& sp, const std::vector<IdSet>& sets, int k, int n, std::uint64_t d)
{
    for (int l = k + 1; l <= n; ++l)
        for (DescId id : sets[static_cast<std::size_t>(l)])
            if (sp[l].idv_contains(id, d)) return true;
    return false;
}

bool reads(const Run& run, std::uint64_t d)
{
    for (const auto& s : run.steps())
        if (!s.label.is_eps() && s.label.data == DataValue::of(d)) return true;
    return false;
}

} // namespace

SrcResult compute_src(const TypeSystem& ts, const LineageRun& lr, std::size_t i, std::size_t j, int k,
                      const std::vector<IdSet>& sigma)
{
    if (k < 0 || k > ts.n()) throw std::invalid_argument("compute_src: level out of range");
    if (!is_k_upper(lr, i, j, k)) throw std::invalid_argument("compute_src: the run is not " + std::to_string(k) + "-upper");
    SrcResult out;
    out.k = k;
    SrcComputer c(ts, lr, k, out);
    out.src = c.compute(i, j, normalize_sigma(sigma, ts.n()), 0);
    for (int l = 0; l <= k; ++l) out.src[static_cast<std::size_t>(l)].clear();
    return out;
}

std::string render_src(const SrcResult& r, const TypeSystem& ts)
{
    std::ostringstream os;
    const RenderNames names = ts.names();
    for (int l = ts.n(); l > r.k; --l) {
        os << "src " << l << ":";
        for (DescId id : r.src[static_cast<std::size_t>(l)]) os << " #" << id;
        os << '\n';
        for (DescId id : r.src[static_cast<std::size_t>(l)]) os << "  #" << id << " " << ts.store().render(id, names) << '\n';
    }
    for (const auto& p : r.provenance) os << "provenance " << p << '\n';
    return os.str();
}

RunPool::RunPool(const TypeSystem& ts, const Configuration& from, std::size_t max_steps)
    : start(from), bound(max_steps)
{
    EnumerationSpace space(ts.automaton(), from);
    space.max_steps = max_steps;
    space.universe = default_universe(from.stack);
    space.normalized_only = true;
    const EnumerationStats stats = for_each_run(space, [&](const Run& r) {
        if (uses_collapse(r)) return;
        LineageRun lr(r);
        Entry e{r, phi_of_run(ts.monoid(), r), {}};
        for (int k = 0; k <= ts.n(); ++k) e.upper.push_back(is_k_upper(lr, k));
        entries.push_back(std::move(e));
    });
    truncated = stats.truncated;
}

CheckReport check_origin(const TypeSystem& ts, const LineageRun& lr, int k, const std::vector<IdSet>& sigma_in,
                         std::uint64_t d, const RunPool& pool)
{
    CheckReport rep;
    const int n = ts.n();
    const Run& run = lr.run();
    if (!(run.first() == pool.start)) throw std::invalid_argument("check_origin: the pool starts elsewhere");
    const std::vector<IdSet> sigma = normalize_sigma(sigma_in, n);
    if (d == 0 || uses_collapse(run) || !is_normalized(run) || !is_k_upper(lr, k) ||
        contains_value(topmost(run.first().stack, k), d)) {
        ++rep.excluded;
        return rep;
    }
    const SpineTyping final_sp = ts.type_of_spine(run.last().stack, k);
    for (int l = k + 1; l <= n; ++l)
        if (!is_subset(sigma[static_cast<std::size_t>(l)], final_sp[l].types())) {
            ++rep.excluded;
            return rep;
        }

    const SrcResult src = compute_src(ts, lr, k, sigma);
    const SpineTyping initial_sp = ts.type_of_spine(run.first().stack, k);
    const bool src_has_d = contains_d(initial_sp, src.src, k, n, d);
    const std::string where = " (run of length " + std::to_string(run.length()) + ", k=" + std::to_string(k) +
                              ", d=" + std::to_string(d) + ")";

    if (contains_d(final_sp, sigma, k, n, d)) {
        ++rep.checked;
        if (!src_has_d) rep.fail("part 1: d is important after the run but in no src set" + where);
    }
    for (int l = k + 1; l <= n; ++l)
        if (!is_subset(src.src[static_cast<std::size_t>(l)], initial_sp[l].types()))
            rep.fail("src^" + std::to_string(l) + " is not contained in the initial piece type" + where);

    if (!src_has_d) return rep;

    // Part 2 with c = R(0).
    ++rep.checked;
    const MonoidElement target_phi = phi_of_run(ts.monoid(), run);
    const Stack& target_top = topmost(run.last().stack, k);
    for (const auto& e : pool.entries) {
        const Run& s = e.run;
        if (!e.upper[static_cast<std::size_t>(k)] || e.phi != target_phi || s.last().state != run.last().state) continue;
        if (!(topmost(s.last().stack, k) == target_top)) continue;
        const SpineTyping v = ts.type_of_spine(s.last().stack, k);
        bool ok = true;
        for (int l = k + 1; l <= n && ok; ++l) ok = is_subset(sigma[static_cast<std::size_t>(l)], v[l].types());
        if (ok && (reads(s, d) || contains_d(v, sigma, k, n, d))) return rep;
    }
    const std::string msg = "part 2: no witness run within bound " + std::to_string(pool.bound) + where;
    if (pool.truncated)
        rep.unwitnessed(msg);
    else
        rep.fail(msg + ", search space exhausted");
    return rep;
}

CheckReport check_origin(const TypeSystem& ts, const LineageRun& lr, int k, const std::vector<IdSet>& sigma,
                         std::uint64_t d, std::size_t bound)
{
    return check_origin(ts, lr, k, sigma, d, RunPool(ts, lr.run().first(), bound));
}

UniquenessIndex::UniquenessIndex(const TypeSystem& ts, const Configuration& start, std::size_t bound) : ts_(ts)
{
    EnumerationSpace space(ts.automaton(), start);
    space.max_steps = bound;
    space.universe = default_universe(start.stack);
    space.normalized_only = true;
    EnumerationStats stats =
        for_each_run(space, [&](const Run& r) { ++counts_[{r.last().state, phi_of_run(ts_.monoid(), r)}]; });
    truncated_ = stats.truncated;
}

bool UniquenessIndex::unique(const Run& run) const
{
    auto it = counts_.find({run.last().state, phi_of_run(ts_.monoid(), run)});
    return it != counts_.end() && it->second == 1;
}

CheckReport check_idv_upper(const TypeSystem& ts, const LineageRun& lr, int k, std::uint64_t d, std::uint64_t d2,
                            const UniquenessIndex& uniqueness)
{
    CheckReport rep;
    const int n = ts.n();
    const Run& run = lr.run();
    const Stack& s_k = topmost(run.first().stack, k);
    if (d == 0 || d2 == 0 || d == d2 || uses_collapse(run) || !is_normalized(run) || !is_k_upper(lr, k) ||
        reads(run, d) || reads(run, d2) || contains_value(s_k, d) || contains_value(s_k, d2) || !uniqueness.unique(run)) {
        ++rep.excluded;
        return rep;
    }
    const SpineTyping initial = ts.type_of_spine(run.first().stack, k);
    for (int l = k + 1; l <= n; ++l)
        for (const auto& [id, idv] : initial[l].idv) {
            (void)idv;
            if (initial[l].idv_contains(id, d) != initial[l].idv_contains(id, d2)) {
                ++rep.excluded;
                return rep;
            }
        }

    ++rep.checked;
    const std::string where = " (run of length " + std::to_string(run.length()) + ", k=" + std::to_string(k) + ", d=" +
                              std::to_string(d) + ", d'=" + std::to_string(d2) + ")";
    const Stack& t_k = topmost(run.last().stack, k);
    if (contains_value(t_k, d) || contains_value(t_k, d2)) rep.fail("value appears in the final topmost k-stack" + where);
    const SpineTyping final_sp = ts.type_of_spine(run.last().stack, k);
    for (int l = k + 1; l <= n; ++l)
        for (const auto& [id, idv] : final_sp[l].idv) {
            (void)idv;
            if (final_sp[l].idv_contains(id, d) != final_sp[l].idv_contains(id, d2))
                rep.fail("idv distinguishes the values at level " + std::to_string(l) + " descriptor #" + std::to_string(id) + where);
        }
    return rep;
}

} // namespace hopad
