#pragma once

#include "hopad/run.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace hopad {

using LineageId = std::uint32_t;

/// A run together with copy-lineage identifiers for every nested stack
/// occurrence. Operations of level j keep the ids of the stacks of level
/// above j that they modify; push^r gives the duplicated (r-1)-stack and
/// all of its contents fresh ids, each a copy of its source, and the
/// replaced topmost atom becomes a copy of the atom it overwrote.
class LineageRun {
public:
    explicit LineageRun(Run run);

    const Run& run() const noexcept { return run_; }
    std::size_t length() const noexcept { return run_.length(); }
    int level() const noexcept { return n_; }

    /// Id of the topmost k-stack of R(t), 0 <= k <= n.
    LineageId top_id(std::size_t t, int k) const { return snaps_.at(t).top[static_cast<std::size_t>(k)]; }

    /// Id of the second topmost (k-1)-stack inside the topmost k-stack of
    /// R(t), if that k-stack has size at least 2 (1 <= k <= n).
    std::optional<LineageId> second_id(std::size_t t, int k) const;

    /// Size of the topmost k-stack of R(t), 1 <= k <= n.
    std::size_t top_size(std::size_t t, int k) const { return snaps_.at(t).size[static_cast<std::size_t>(k)]; }

    std::optional<LineageId> copy_of(LineageId id) const;
    std::size_t birth(LineageId id) const { return ids_.at(id).birth; }
    std::size_t death(LineageId id) const { return ids_.at(id).death; } ///< npos while alive at the end
    bool alive(LineageId id, std::size_t t) const { return birth(id) <= t && t < death(id); }

    /// Reflexive-transitive copy-of closure: is `id` a (possibly iterated)
    /// copy of `ancestor`, or `ancestor` itself?
    bool descends(LineageId id, LineageId ancestor) const;
    /// Like descends, but every copy on the way must have been made after
    /// time t: `id` is a copy, within R[t..], of the stack `ancestor`.
    bool descends_since(LineageId id, LineageId ancestor, std::size_t t) const;

    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    static constexpr LineageId no_id = std::numeric_limits<LineageId>::max();

private:
    struct IdInfo {
        LineageId parent = no_id;
        std::size_t birth = 0;
        std::size_t death = npos;
    };
    struct Snapshot {
        std::vector<LineageId> top;    // index k = 0..n
        std::vector<LineageId> second; // index k = 1..n, no_id if absent
        std::vector<std::size_t> size; // index k = 1..n
    };

    Run run_;
    int n_;
    std::vector<IdInfo> ids_;
    std::vector<Snapshot> snaps_;
};

bool is_k_upper(const LineageRun& lr, std::size_t i, std::size_t j, int k);
bool is_k_return(const LineageRun& lr, std::size_t i, std::size_t j, int k);

/// The alternative characterization of k-returns: the run is k-upper, ends
/// with the traced copy of the initial second topmost (k-1)-stack on top,
/// and its last step removed the traced topmost (k-1)-stack.
bool is_k_return_remark(const LineageRun& lr, std::size_t i, std::size_t j, int k);

inline bool is_k_upper(const LineageRun& lr, int k) { return is_k_upper(lr, 0, lr.length(), k); }
inline bool is_k_return(const LineageRun& lr, int k) { return is_k_return(lr, 0, lr.length(), k); }

/// For each j and k, the sets {i : R[i..j] is k-upper} (k = 0..n) and
/// {i : R[i..j] is a k-return} (k = 1..n).
struct ClassificationTable {
    int n = 0;
    std::vector<std::vector<std::vector<std::size_t>>> upper;  ///< [j][k]
    std::vector<std::vector<std::vector<std::size_t>>> returns; ///< [j][k], k = 0 unused
};

ClassificationTable classification_table(const LineageRun& lr);

} // namespace hopad
