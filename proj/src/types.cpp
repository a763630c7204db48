#include "hopad/types.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace hopad {

IdSet Typing::types() const
{
    IdSet out;
    out.reserve(idv.size());
    for (const auto& [id, _] : idv) out.push_back(id);
    return out;
}

const std::vector<std::uint64_t>& Typing::idv_of(DescId id) const
{
    static const std::vector<std::uint64_t> none;
    auto it = idv.find(id);
    return it == idv.end() ? none : it->second;
}

bool Typing::idv_contains(DescId id, std::uint64_t d) const
{
    const auto& v = idv_of(id);
    return std::binary_search(v.begin(), v.end(), d);
}

TypeSystem::TypeSystem(const Automaton& aut, FiniteMonoid monoid, std::size_t cap)
    : aut_(aut), monoid_(std::move(monoid)), store_(aut.level(), cap), table_(aut.symbol_count() * 2)
{
    monoid_.bind(aut_.input_alphabet());
}

TypeSystem::TypeSystem(const TypeSystem& o)
    : aut_(o.aut_), monoid_(o.monoid_), store_(o.store_), table_(o.table_), stats_(o.stats_)
{
}

TypeSystem::TypeSystem(TypeSystem&& o) noexcept
    : aut_(std::move(o.aut_)),
      monoid_(std::move(o.monoid_)),
      store_(std::move(o.store_)),
      table_(std::move(o.table_)),
      stats_(o.stats_)
{
}

RenderNames TypeSystem::names() const
{
    RenderNames r;
    r.states = aut_.states();
    for (MonoidElement m = 0; m < monoid_.size(); ++m) r.monoid.push_back(monoid_.name(m));
    return r;
}

const TableEntry& TypeSystem::entry(SymbolId symbol, bool has_data) const
{
    return table_.at(symbol * 2 + (has_data ? 1 : 0));
}

// ---------------------------------------------------------------------------
// Saturation

class Saturator {
public:
    Saturator(TypeSystem& ts, const SaturationOptions& opts) : ts_(ts), opts_(opts), n_(ts.n())
    {
        if (opts.shuffle_seed) rng_.seed(*opts.shuffle_seed);
        candidates_.resize(static_cast<std::size_t>(n_ + 1));
        const auto keys = ts_.table_.size();
        dependents_.resize(keys);
        for (const auto& t : ts_.aut_.transitions()) {
            if (t.op.kind == OpKind::collapse) continue;
            for (int hd = 0; hd < 2; ++hd) {
                const std::size_t key = t.top * 2 + static_cast<std::size_t>(hd);
                if (t.op.kind == OpKind::pop) pop_keys_.insert(key);
                if (t.op.kind == OpKind::push) {
                    const std::size_t pushed = t.op.symbol * 2 + (t.letter ? 1u : 0u);
                    dependents_[pushed].insert(key);
                }
            }
        }
        in_queue_.assign(keys, false);
        for (std::size_t k = 0; k < keys; ++k) enqueue(k);
    }

    void run()
    {
        while (!queue_.empty()) {
            std::size_t pick = 0;
            if (opts_.shuffle_seed) pick = static_cast<std::size_t>(rng_() % queue_.size());
            const std::size_t key = queue_[pick];
            queue_.erase(queue_.begin() + static_cast<std::ptrdiff_t>(pick));
            in_queue_[key] = false;
            ++ts_.stats_.key_visits;
            process(key);
        }
        ts_.store_.close_under_projection();
        std::size_t total = 0;
        for (const auto& e : ts_.table_) total += e.size();
        ts_.stats_.table_descriptors = total;
        ts_.stats_.interned = ts_.store_.size();
    }

private:
    void enqueue(std::size_t key)
    {
        if (in_queue_[key]) return;
        in_queue_[key] = true;
        queue_.push_back(key);
    }

    DescId intern(Descriptor d)
    {
        try {
            return ts_.store_.intern(std::move(d));
        } catch (const std::length_error& e) {
            ts_.stats_.interned = ts_.store_.size();
            throw SaturationLimit(std::string("saturation aborted: ") + e.what(), ts_.stats_);
        }
    }

    DescId project(DescId id, int k)
    {
        try {
            return ts_.store_.project(id, k);
        } catch (const std::length_error& e) {
            ts_.stats_.interned = ts_.store_.size();
            throw SaturationLimit(std::string("saturation aborted: ") + e.what(), ts_.stats_);
        }
    }

    void add(std::size_t key, Descriptor d, bool flag)
    {
        ++ts_.stats_.rule_applications;
        const DescId id = intern(std::move(d));
        auto& entry = ts_.table_[key];
        auto [it, inserted] = entry.emplace(id, flag);
        bool changed = inserted;
        if (!inserted && flag && !it->second) {
            it->second = true;
            changed = true;
        }
        if (!changed) return;
        enqueue(key);
        for (auto dep : dependents_[key]) enqueue(dep);
        if (!inserted) return;
        bool new_candidate = false;
        const int r = ts_.store_.get(id).goal.r;
        for (int k = 1; k < r && k <= n_; ++k)
            if (candidates_[static_cast<std::size_t>(k)].insert(project(id, k)).second) new_candidate = true;
        if (new_candidate)
            for (auto pk : pop_keys_) enqueue(pk);
    }

    Descriptor blank() const
    {
        Descriptor d;
        d.level = 0;
        d.psi.resize(static_cast<std::size_t>(n_ + 1));
        d.goal.sigma.resize(static_cast<std::size_t>(n_ + 1));
        return d;
    }

    void process(std::size_t key)
    {
        const SymbolId alpha = static_cast<SymbolId>(key / 2);
        const bool has_data = key % 2 == 1;
        for (const auto& t : ts_.aut_.transitions()) {
            if (t.top != alpha) continue;
            const MonoidElement phi_a = t.letter ? ts_.monoid_.image(*t.letter) : ts_.monoid_.identity();
            if (t.op.kind == OpKind::pop) {
                if (t.letter && !has_data) continue;
                apply_pop(key, t, phi_a);
            } else if (t.op.kind == OpKind::push) {
                apply_push(key, t, phi_a);
            }
        }
    }

    void apply_pop(std::size_t key, const Transition& t, MonoidElement phi_a)
    {
        const int k = t.op.level;
        const bool flag = t.letter.has_value();
        // Rule 1a: the assumption sets above level k range over the subsets
        // of {ne} at each level.
        const int free_levels = n_ - k;
        for (std::uint32_t mask = 0; mask < (1u << free_levels); ++mask) {
            Descriptor d = blank();
            d.p = t.source;
            d.psi[static_cast<std::size_t>(k)] = {ts_.store_.ne(k)};
            d.goal.m = phi_a;
            d.goal.r = k;
            d.goal.q = t.target;
            for (int i = k + 1; i <= n_; ++i) {
                if (mask & (1u << (i - k - 1))) {
                    d.psi[static_cast<std::size_t>(i)] = {ts_.store_.ne(i)};
                    d.goal.sigma[static_cast<std::size_t>(i)] = {ts_.store_.ne(i)};
                }
            }
            add(key, std::move(d), flag);
        }
        // Rule 1b: continue with a level-k descriptor starting in q1.
        const std::vector<DescId> cands(candidates_[static_cast<std::size_t>(k)].begin(),
                                        candidates_[static_cast<std::size_t>(k)].end());
        for (DescId tau_id : cands) {
            const Descriptor tau = ts_.store_.get(tau_id);
            if (tau.p != t.target) continue;
            Descriptor d = blank();
            d.p = t.source;
            for (int i = k + 1; i <= n_; ++i) d.psi[static_cast<std::size_t>(i)] = tau.psi[static_cast<std::size_t>(i)];
            d.psi[static_cast<std::size_t>(k)] = {tau_id};
            d.goal = tau.goal;
            d.goal.m = ts_.monoid_.multiply(phi_a, tau.goal.m);
            add(key, std::move(d), flag);
        }
    }

    void apply_push(std::size_t key, const Transition& t, MonoidElement phi_a)
    {
        const int k = t.op.level;
        const std::size_t pushed_key = t.op.symbol * 2 + (t.letter ? 1u : 0u);
        const std::vector<std::pair<DescId, bool>> pushed(ts_.table_[pushed_key].begin(), ts_.table_[pushed_key].end());
        const std::vector<std::pair<DescId, bool>> own(ts_.table_[key].begin(), ts_.table_[key].end());

        // Composer witnesses: level-0 descriptors of this atom grouped by
        // their projection to level k.
        std::map<DescId, std::vector<std::pair<DescId, bool>>> by_projection;
        for (const auto& [sid, sflag] : own)
            if (ts_.store_.projectable(sid, k)) by_projection[project(sid, k)].push_back({sid, sflag});

        for (const auto& [tau_id, tau_flag_unused] : pushed) {
            (void)tau_flag_unused;
            const Descriptor tau = ts_.store_.get(tau_id);
            if (tau.p != t.target) continue;
            std::vector<const std::vector<std::pair<DescId, bool>>*> slots;
            bool feasible = true;
            for (DescId member : tau.psi[static_cast<std::size_t>(k)]) {
                if (ts_.store_.is_ne(member)) continue;
                auto it = by_projection.find(member);
                if (it == by_projection.end()) {
                    feasible = false;
                    break;
                }
                slots.push_back(&it->second);
            }
            if (!feasible) continue;

            std::vector<std::size_t> choice(slots.size(), 0);
            for (;;) {
                std::vector<IdSet> phi(static_cast<std::size_t>(n_ + 1));
                bool phi_flag = false;
                for (std::size_t s = 0; s < slots.size(); ++s) {
                    const auto& [sid, sflag] = (*slots[s])[choice[s]];
                    phi_flag = phi_flag || sflag;
                    const Descriptor& sigma0 = ts_.store_.get(sid);
                    for (int i = 1; i <= k; ++i)
                        phi[static_cast<std::size_t>(i)] =
                            set_union(phi[static_cast<std::size_t>(i)], sigma0.psi[static_cast<std::size_t>(i)]);
                }
                emit_push(key, t, phi_a, tau, phi, phi_flag, own);

                std::size_t pos = 0;
                while (pos < slots.size() && ++choice[pos] == slots[pos]->size()) choice[pos++] = 0;
                if (pos == slots.size()) break;
            }
        }
    }

    void emit_push(std::size_t key, const Transition& t, MonoidElement phi_a, const Descriptor& tau,
                   const std::vector<IdSet>& phi, bool phi_flag, const std::vector<std::pair<DescId, bool>>& own)
    {
        const int k = t.op.level;
        if (tau.goal.r != k) {
            // Rule 2a.
            Descriptor d = blank();
            d.p = t.source;
            for (int i = 1; i <= n_; ++i) {
                const auto si = static_cast<std::size_t>(i);
                if (i > k)
                    d.psi[si] = tau.psi[si];
                else if (i == k)
                    d.psi[si] = phi[si];
                else
                    d.psi[si] = set_union(tau.psi[si], phi[si]);
            }
            d.goal = tau.goal;
            d.goal.m = ts_.monoid_.multiply(phi_a, tau.goal.m);
            add(key, std::move(d), phi_flag);
            return;
        }
        // Rule 2b: chain a continuation descriptor of the same atom.
        for (const auto& [chi_id, chi_flag] : own) {
            const Descriptor chi = ts_.store_.get(chi_id);
            if (chi.p != tau.goal.q || chi.goal.r > k) continue;
            bool match = true;
            for (int i = k + 1; i <= n_ && match; ++i)
                match = chi.psi[static_cast<std::size_t>(i)] == tau.goal.sigma[static_cast<std::size_t>(i)];
            if (!match) continue;
            Descriptor d = blank();
            d.p = t.source;
            for (int i = 1; i <= n_; ++i) {
                const auto si = static_cast<std::size_t>(i);
                if (i > k)
                    d.psi[si] = tau.psi[si];
                else if (i == k)
                    d.psi[si] = set_union(phi[si], chi.psi[si]);
                else
                    d.psi[si] = set_union(set_union(tau.psi[si], phi[si]), chi.psi[si]);
            }
            d.goal = chi.goal;
            d.goal.m = ts_.monoid_.multiply(ts_.monoid_.multiply(phi_a, tau.goal.m), chi.goal.m);
            add(key, std::move(d), chi_flag || phi_flag);
        }
    }

    TypeSystem& ts_;
    const SaturationOptions& opts_;
    int n_;
    std::mt19937_64 rng_;
    std::deque<std::size_t> queue_;
    std::vector<bool> in_queue_;
    std::vector<std::set<std::size_t>> dependents_;
    std::set<std::size_t> pop_keys_;
    std::vector<std::set<DescId>> candidates_;
};

TypeSystem TypeSystem::saturate(const Automaton& aut, FiniteMonoid monoid, const SaturationOptions& opts)
{
    TypeSystem ts(aut, std::move(monoid), opts.descriptor_cap);
    Saturator(ts, opts).run();
    return ts;
}

// ---------------------------------------------------------------------------
// Typing

namespace {

std::vector<std::uint64_t> merge_values(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    std::vector<std::uint64_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

Typing TypeSystem::combine(const Typing& rest, const Typing& top) const
{
    const int j = rest.level;
    if (top.level != j - 1) throw std::invalid_argument("TypeSystem::combine: level mismatch");
    Typing out{j, {}};
    out.idv[store_.ne(j)];
    const IdSet rest_types = rest.types();
    for (const auto& [sid, sidv] : top.idv) {
        if (!store_.projectable(sid, j)) continue;
        const Descriptor& sigma = store_.get(sid);
        const IdSet& need = sigma.psi[static_cast<std::size_t>(j)];
        if (!is_subset(need, rest_types)) continue;
        auto tau = store_.find_projection(sid, j);
        if (!tau) throw std::logic_error("TypeSystem::combine: projection missing from the closed store");
        auto& acc = out.idv[*tau];
        acc = merge_values(acc, sidv);
        for (DescId rho : need) acc = merge_values(acc, rest.idv_of(rho));
    }
    return out;
}

Typing TypeSystem::type_of(const Stack& s) const
{
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        if (auto it = cache_.find(s.identity()); it != cache_.end()) return it->second.second;
    }
    Typing out;
    if (s.is_atom()) {
        const Atom& a = s.as_atom();
        out.level = 0;
        for (const auto& [id, flag] : entry(a.symbol, a.data.has_value())) {
            auto& v = out.idv[id];
            if (flag && a.data.has_value()) v.push_back(a.data.value());
        }
    } else {
        out = empty_typing(s.level());
        for (const auto& item : s.items()) out = combine(out, type_of(item));
    }
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.emplace(s.identity(), std::make_pair(s, out));
    return out;
}

SpineTyping TypeSystem::type_of_spine(const Stack& s, int k) const
{
    Spine sp = spine(s, k);
    SpineTyping out;
    out.k = k;
    for (const auto& piece : sp.pieces) out.pieces.push_back(type_of(piece));
    return out;
}

void TypeSystem::clear_cache() const
{
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cache_.clear();
}

std::optional<ComposerWitness> TypeSystem::check_composer(int k, int l, const std::vector<IdSet>& phi, const IdSet& psi_k) const
{
    if (l < 0 || l >= k || k > n() || phi.size() != static_cast<std::size_t>(n() + 1))
        throw std::invalid_argument("check_composer: bad levels");
    const IdSet& phi_l = phi[static_cast<std::size_t>(l)];
    std::vector<DescId> targets;
    std::vector<std::vector<DescId>> options;
    for (DescId tau : psi_k) {
        if (store_.get(tau).level != k) return std::nullopt;
        if (store_.is_ne(tau)) continue;
        std::vector<DescId> opts;
        for (DescId sigma : phi_l)
            if (store_.projectable(sigma, k) && store_.get(sigma).level == l && store_.projection_of(sigma, k) == store_.get(tau))
                opts.push_back(sigma);
        if (opts.empty()) return std::nullopt;
        targets.push_back(tau);
        options.push_back(std::move(opts));
    }
    std::vector<std::size_t> choice(options.size(), 0);
    for (;;) {
        std::vector<IdSet> got(static_cast<std::size_t>(n() + 1));
        for (std::size_t s = 0; s < options.size(); ++s) {
            const DescId sigma = options[s][choice[s]];
            got[static_cast<std::size_t>(l)] = set_union(got[static_cast<std::size_t>(l)], {sigma});
            for (int i = l + 1; i <= k; ++i)
                got[static_cast<std::size_t>(i)] =
                    set_union(got[static_cast<std::size_t>(i)], store_.get(sigma).psi[static_cast<std::size_t>(i)]);
        }
        bool equal = true;
        for (int i = l; i <= k && equal; ++i) equal = got[static_cast<std::size_t>(i)] == phi[static_cast<std::size_t>(i)];
        if (equal) {
            ComposerWitness w;
            for (std::size_t s = 0; s < options.size(); ++s) w.choices.push_back({targets[s], options[s][choice[s]]});
            return w;
        }
        std::size_t pos = 0;
        while (pos < options.size() && ++choice[pos] == options[pos].size()) choice[pos++] = 0;
        if (pos == options.size()) break;
    }
    return std::nullopt;
}

std::vector<std::string> TypeSystem::structural_table() const
{
    std::vector<std::string> out;
    const RenderNames rn = names();
    for (std::size_t key = 0; key < table_.size(); ++key) {
        const std::string head = aut_.stack_alphabet()[key / 2] + (key % 2 ? " data" : " nodata");
        std::vector<std::string> lines;
        for (const auto& [id, flag] : table_[key])
            lines.push_back(head + " " + store_.render_structural(id, rn) + (flag ? " idv" : ""));
        std::sort(lines.begin(), lines.end());
        out.insert(out.end(), lines.begin(), lines.end());
    }
    return out;
}

} // namespace hopad
