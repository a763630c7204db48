#include "hopad/descriptor.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hopad {

IdSet make_set(std::vector<DescId> ids)
{
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

IdSet set_union(const IdSet& a, const IdSet& b)
{
    IdSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const IdSet& a, const IdSet& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::size_t DescriptorStore::KeyHash::operator()(const std::vector<std::uint32_t>& v) const noexcept
{
    std::size_t h = v.size();
    for (auto x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

DescriptorStore::DescriptorStore(int n, std::size_t cap) : n_(n), cap_(cap)
{
    if (n < 1) throw std::invalid_argument("DescriptorStore: level must be >= 1");
    ne_.assign(static_cast<std::size_t>(n + 1), std::numeric_limits<DescId>::max());
    for (int k = 1; k <= n; ++k) {
        Descriptor d;
        d.level = k;
        d.ne = true;
        ne_[static_cast<std::size_t>(k)] = intern(d);
    }
}

Descriptor DescriptorStore::normalized(Descriptor d) const
{
    const auto slots = static_cast<std::size_t>(n_ + 1);
    d.psi.resize(slots);
    d.goal.sigma.resize(slots);
    if (d.ne) {
        Descriptor out;
        out.level = d.level;
        out.ne = true;
        out.psi.resize(slots);
        out.goal.sigma.resize(slots);
        return out;
    }
    for (int i = 0; i <= d.level && i <= n_; ++i) d.psi[static_cast<std::size_t>(i)].clear();
    for (int i = 0; i <= d.goal.r && i <= n_; ++i) d.goal.sigma[static_cast<std::size_t>(i)].clear();
    return d;
}

std::vector<std::uint32_t> DescriptorStore::key_of(const Descriptor& d) const
{
    std::vector<std::uint32_t> key;
    key.push_back(static_cast<std::uint32_t>(d.level));
    key.push_back(d.ne ? 1u : 0u);
    if (d.ne) return key;
    key.push_back(d.p);
    for (int i = d.level + 1; i <= n_; ++i) {
        const auto& s = d.psi[static_cast<std::size_t>(i)];
        key.push_back(static_cast<std::uint32_t>(s.size()));
        key.insert(key.end(), s.begin(), s.end());
    }
    key.push_back(d.goal.m);
    key.push_back(static_cast<std::uint32_t>(d.goal.r));
    for (int i = d.goal.r + 1; i <= n_; ++i) {
        const auto& s = d.goal.sigma[static_cast<std::size_t>(i)];
        key.push_back(static_cast<std::uint32_t>(s.size()));
        key.insert(key.end(), s.begin(), s.end());
    }
    key.push_back(d.goal.q);
    return key;
}

DescId DescriptorStore::intern(Descriptor d)
{
    if (d.level < 0 || d.level > n_) throw std::invalid_argument("DescriptorStore::intern: level out of range");
    if (!d.ne && (d.goal.r <= d.level || d.goal.r > n_))
        throw std::invalid_argument("DescriptorStore::intern: goal return level must lie in (level, n]");
    d = normalized(std::move(d));
    auto key = key_of(d);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    if (descs_.size() >= cap_)
        throw std::length_error("descriptor cap of " + std::to_string(cap_) + " exceeded");
    const auto id = static_cast<DescId>(descs_.size());
    descs_.push_back(std::move(d));
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<DescId> DescriptorStore::find(const Descriptor& d) const
{
    auto it = index_.find(key_of(normalized(d)));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool DescriptorStore::projectable(DescId id, int k) const
{
    const Descriptor& d = get(id);
    return !d.ne && d.level < k && k <= n_ && d.goal.r > k;
}

Descriptor DescriptorStore::projection_of(DescId id, int k) const
{
    if (!projectable(id, k)) throw std::invalid_argument("DescriptorStore::projection_of: not projectable");
    Descriptor d = get(id);
    d.level = k;
    for (int i = 0; i <= k; ++i) d.psi[static_cast<std::size_t>(i)].clear();
    return d;
}

DescId DescriptorStore::project(DescId id, int k)
{
    const std::uint64_t key = (static_cast<std::uint64_t>(id) << 8) | static_cast<std::uint64_t>(k);
    if (auto it = proj_.find(key); it != proj_.end()) return it->second;
    DescId out = intern(projection_of(id, k));
    proj_.emplace(key, out);
    return out;
}

std::optional<DescId> DescriptorStore::find_projection(DescId id, int k) const
{
    if (!projectable(id, k)) return std::nullopt;
    const std::uint64_t key = (static_cast<std::uint64_t>(id) << 8) | static_cast<std::uint64_t>(k);
    if (auto it = proj_.find(key); it != proj_.end()) return it->second;
    return std::nullopt;
}

void DescriptorStore::close_under_projection()
{
    for (std::size_t id = 0; id < descs_.size(); ++id)
        for (int k = get(static_cast<DescId>(id)).level + 1; k <= n_; ++k)
            if (projectable(static_cast<DescId>(id), k)) project(static_cast<DescId>(id), k);
}

namespace {

std::string state_name(StateId q, const RenderNames& names)
{
    return q < names.states.size() ? names.states[q] : "q" + std::to_string(q);
}

std::string monoid_name(MonoidElement m, const RenderNames& names)
{
    return m < names.monoid.size() ? names.monoid[m] : "m" + std::to_string(m);
}

} // namespace

std::string render_goal(const Goal& g, const DescriptorStore& store, const RenderNames& names)
{
    std::string out = "(goal " + monoid_name(g.m, names) + " " + std::to_string(g.r);
    for (int i = store.n(); i > g.r; --i) {
        out += " (sigma " + std::to_string(i);
        for (auto id : g.sigma[static_cast<std::size_t>(i)]) out += " #" + std::to_string(id);
        out += ")";
    }
    out += " " + state_name(g.q, names) + ")";
    return out;
}

std::string DescriptorStore::render(DescId id, const RenderNames& names) const
{
    const Descriptor& d = get(id);
    if (d.ne) return "(ne)";
    std::string out = "(desc";
    for (int i = n_; i > d.level; --i) {
        out += " (psi " + std::to_string(i);
        for (auto x : d.psi[static_cast<std::size_t>(i)]) out += " #" + std::to_string(x);
        out += ")";
    }
    out += " " + state_name(d.p, names) + " " + render_goal(d.goal, *this, names) + ")";
    return out;
}

std::string DescriptorStore::render_structural(DescId id, const RenderNames& names) const
{
    const Descriptor& d = get(id);
    if (d.ne) return "(ne " + std::to_string(d.level) + ")";
    auto render_set = [&](const char* tag, int level, const IdSet& s) {
        std::vector<std::string> parts;
        for (auto x : s) parts.push_back(render_structural(x, names));
        std::sort(parts.begin(), parts.end());
        std::string out = std::string(" (") + tag + " " + std::to_string(level);
        for (const auto& p : parts) out += " " + p;
        return out + ")";
    };
    std::string out = "(desc " + std::to_string(d.level);
    for (int i = n_; i > d.level; --i) out += render_set("psi", i, d.psi[static_cast<std::size_t>(i)]);
    out += " " + state_name(d.p, names) + " (goal " + monoid_name(d.goal.m, names) + " " + std::to_string(d.goal.r);
    for (int i = n_; i > d.goal.r; --i) out += render_set("sigma", i, d.goal.sigma[static_cast<std::size_t>(i)]);
    out += " " + state_name(d.goal.q, names) + "))";
    return out;
}

} // namespace hopad
