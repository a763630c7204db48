#pragma once

#include "hopad/monoid.hpp"
#include "hopad/stack.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hopad {

using DescId = std::uint32_t;

/// Sorted, duplicate-free set of descriptor ids.
using IdSet = std::vector<DescId>;

IdSet make_set(std::vector<DescId> ids);
IdSet set_union(const IdSet& a, const IdSet& b);
bool is_subset(const IdSet& a, const IdSet& b);

/// Element of D^k: monoid value, return level r, result assumptions
/// Sigma^n..Sigma^{r+1}, and target state.
struct Goal {
    MonoidElement m = 0;
    int r = 1;
    std::vector<IdSet> sigma; ///< indexed by absolute level 0..n; only r+1..n used
    StateId q = 0;

    bool operator==(const Goal&) const = default;
};

/// Element of T^k: either NE, or assumptions Psi^n..Psi^{k+1}, a start state
/// and a goal whose return level exceeds k.
struct Descriptor {
    int level = 0;
    bool ne = false;
    std::vector<IdSet> psi; ///< indexed by absolute level 0..n; only level+1..n used
    StateId p = 0;
    Goal goal;

    bool operator==(const Descriptor&) const = default;
};

/// Names used when printing descriptors.
struct RenderNames {
    std::vector<std::string> states;
    std::vector<std::string> monoid;
};

/// Interning store: structurally equal descriptors share one id. Ids are
/// dense and assigned in creation order.
class DescriptorStore {
public:
    explicit DescriptorStore(int n, std::size_t cap = 50000);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return descs_.size(); }
    std::size_t cap() const noexcept { return cap_; }

    /// Interns a descriptor (normalizing unused slots). Throws
    /// std::length_error when the cap is exceeded.
    DescId intern(Descriptor d);
    std::optional<DescId> find(const Descriptor& d) const;

    const Descriptor& get(DescId id) const { return descs_.at(id); }
    DescId ne(int level) const { return ne_.at(static_cast<std::size_t>(level)); }
    bool is_ne(DescId id) const { return descs_.at(id).ne; }

    /// The composer-rule-1 image of a descriptor of level l < k at level k:
    /// same higher assumptions, state and goal. Requires goal.r > k.
    Descriptor projection_of(DescId id, int k) const;
    bool projectable(DescId id, int k) const;

    /// Interned projection.
    DescId project(DescId id, int k);

    /// Lookup-only projection; nullopt when not interned or not projectable.
    std::optional<DescId> find_projection(DescId id, int k) const;

    /// Interns the projections of every descriptor to every admissible
    /// level, closing the store under projection.
    void close_under_projection();

    /// `(ne)`, `(desc (psi L #i ...) ... state goal)` with ids as `#id`.
    std::string render(DescId id, const RenderNames& names) const;

    /// Id-free structural rendering (nested descriptors expanded).
    std::string render_structural(DescId id, const RenderNames& names) const;

private:
    std::vector<std::uint32_t> key_of(const Descriptor& d) const;
    Descriptor normalized(Descriptor d) const;

    struct KeyHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept;
    };

    int n_;
    std::size_t cap_;
    std::vector<Descriptor> descs_;
    std::unordered_map<std::vector<std::uint32_t>, DescId, KeyHash> index_;
    std::vector<DescId> ne_;
    std::unordered_map<std::uint64_t, DescId> proj_; // (id << 8 | k) -> projection
};

std::string render_goal(const Goal& g, const DescriptorStore& store, const RenderNames& names);

} // namespace hopad
