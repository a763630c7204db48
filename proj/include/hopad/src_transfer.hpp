#pragma once

#include "hopad/lineage.hpp"
#include "hopad/type_checks.hpp"
#include "hopad/types.hpp"

#include <string>
#include <vector>

namespace hopad {

struct SrcResult {
    int k = 0;
    std::vector<IdSet> src;              ///< indexed by absolute level; k+1..n used
    std::vector<std::string> provenance; ///< one line per recursion node, indented by depth
};

/// src sets of the k-upper subrun R[i..j] for target assumptions `sigma`
/// (indexed by absolute level, k+1..n used). Cases are tried in order
/// 1, 2, 3, 4; case 4 uses the smallest split index. Throws
/// std::invalid_argument when R[i..j] is not k-upper.
SrcResult compute_src(const TypeSystem& ts, const LineageRun& lr, std::size_t i, std::size_t j, int k,
                      const std::vector<IdSet>& sigma);

inline SrcResult compute_src(const TypeSystem& ts, const LineageRun& lr, int k, const std::vector<IdSet>& sigma)
{
    return compute_src(ts, lr, 0, lr.length(), k, sigma);
}

std::string render_src(const SrcResult& r, const TypeSystem& ts);

/// Normalized runs from one configuration, enumerated once and shared by
/// the bounded searches of check_origin.
struct RunPool {
    struct Entry {
        Run run;
        MonoidElement phi = 0;
        std::vector<bool> upper; ///< index k = 0..n
    };
    RunPool(const TypeSystem& ts, const Configuration& start, std::size_t bound);

    Configuration start;
    std::size_t bound = 0;
    std::vector<Entry> entries; ///< collapse-free runs only
    bool truncated = false;
};

/// Checks both parts of the origin lemma for one run, assumption choice
/// and value d. Part 1 is exact; part 2 searches the pool of normalized
/// k-upper runs from R(0) (refuted only when the pool was not truncated).
CheckReport check_origin(const TypeSystem& ts, const LineageRun& lr, int k, const std::vector<IdSet>& sigma,
                         std::uint64_t d, const RunPool& pool);
CheckReport check_origin(const TypeSystem& ts, const LineageRun& lr, int k, const std::vector<IdSet>& sigma,
                         std::uint64_t d, std::size_t bound);

/// Groups normalized runs from one configuration by final state and monoid
/// value, so that the uniqueness hypothesis can be decided per run.
class UniquenessIndex {
public:
    UniquenessIndex(const TypeSystem& ts, const Configuration& start, std::size_t bound);

    /// True when no other enumerated normalized run ends in the same state
    /// with the same monoid value.
    bool unique(const Run& run) const;
    bool exhaustive() const noexcept { return !truncated_; }

private:
    const TypeSystem& ts_;
    std::map<std::pair<StateId, MonoidElement>, std::size_t> counts_;
    bool truncated_ = false;
};

/// Checks the transfer lemma for one normalized k-upper run and values d,
/// d'. Hypothesis violations are counted as excluded, not as failures.
CheckReport check_idv_upper(const TypeSystem& ts, const LineageRun& lr, int k, std::uint64_t d, std::uint64_t d2,
                            const UniquenessIndex& uniqueness);

} // namespace hopad
