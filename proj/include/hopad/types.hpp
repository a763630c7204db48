#pragma once

#include "hopad/automaton.hpp"
#include "hopad/descriptor.hpp"
#include "hopad/monoid.hpp"
#include "hopad/stack.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace hopad {

/// Level-0 table entry: descriptor id -> idv flag (the atom's own data value
/// is important for that descriptor).
using TableEntry = std::map<DescId, bool>;

struct SaturationOptions {
    std::size_t descriptor_cap = 50000;
    std::optional<std::uint64_t> shuffle_seed; ///< process dirty keys in random order
};

struct SaturationStats {
    std::size_t key_visits = 0;
    std::size_t rule_applications = 0;
    std::size_t table_descriptors = 0;
    std::size_t interned = 0;
};

/// Thrown when saturation exceeds the descriptor cap.
class SaturationLimit : public std::runtime_error {
public:
    SaturationLimit(const std::string& what, SaturationStats stats) : std::runtime_error(what), stats_(stats) {}
    const SaturationStats& stats() const noexcept { return stats_; }

private:
    SaturationStats stats_;
};

/// Type set of a stack with important data values per descriptor.
struct Typing {
    int level = 0;
    std::map<DescId, std::vector<std::uint64_t>> idv; ///< keys form the type; values sorted

    IdSet types() const;
    bool contains(DescId id) const { return idv.count(id) != 0; }
    const std::vector<std::uint64_t>& idv_of(DescId id) const;
    bool idv_contains(DescId id, std::uint64_t d) const;
};

/// Typings of the pieces s^n, ..., s^k of a spine.
struct SpineTyping {
    int k = 0;
    std::vector<Typing> pieces; ///< pieces[i - k] types s^i

    const Typing& operator[](int level) const { return pieces.at(static_cast<std::size_t>(level - k)); }
};

/// Witness of a composer: the level-l descriptor chosen for each non-NE
/// member of Psi^k.
struct ComposerWitness {
    std::vector<std::pair<DescId, DescId>> choices; ///< (tau in Psi^k, sigma in Phi^l)
};

/// The saturated level-0 type table of an automaton together with the
/// descriptor store, and compositional typing of concrete stacks.
class TypeSystem {
public:
    /// Computes the least fixpoint of the level-0 rules. Collapse
    /// transitions are not part of the model and are ignored.
    static TypeSystem saturate(const Automaton& aut, FiniteMonoid monoid, const SaturationOptions& opts = {});

    TypeSystem(const TypeSystem& o);
    TypeSystem& operator=(const TypeSystem&) = delete;
    TypeSystem(TypeSystem&&) noexcept;

    const Automaton& automaton() const noexcept { return aut_; }
    const FiniteMonoid& monoid() const noexcept { return monoid_; }
    const DescriptorStore& store() const noexcept { return store_; }
    const SaturationStats& stats() const noexcept { return stats_; }
    int n() const noexcept { return store_.n(); }
    RenderNames names() const;

    const TableEntry& entry(SymbolId symbol, bool has_data) const;

    /// Typing of a stack of any level; atoms use the table.
    Typing type_of(const Stack& s) const;

    /// Typing of t^k : t^{k-1} from the typings of t^k and t^{k-1}.
    Typing combine(const Typing& rest, const Typing& top) const;

    /// Typing of the empty stack of the given level (level >= 1).
    Typing empty_typing(int level) const { return Typing{level, {}}; }

    SpineTyping type_of_spine(const Stack& s, int k) const;

    /// Decides whether (Phi^k, ..., Phi^l; Psi^k) is a composer. `phi` is
    /// indexed by absolute level and must have n+1 entries.
    std::optional<ComposerWitness> check_composer(int k, int l, const std::vector<IdSet>& phi, const IdSet& psi_k) const;

    /// Canonical id-free rendering of every table entry, used to compare
    /// saturations performed in different orders.
    std::vector<std::string> structural_table() const;

    void clear_cache() const;

private:
    TypeSystem(const Automaton& aut, FiniteMonoid monoid, std::size_t cap);

    Automaton aut_;
    FiniteMonoid monoid_;
    DescriptorStore store_;
    std::vector<TableEntry> table_; // symbol * 2 + has_data
    SaturationStats stats_;

    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<const void*, std::pair<Stack, Typing>> cache_;

    friend class Saturator;
};

} // namespace hopad
