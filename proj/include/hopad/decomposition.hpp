#pragma once

#include "hopad/run.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hopad {

/// The effect of a step on the stack structure. A collapse is read by how
/// many (i-1)-stacks it removed: none (noop), one (pop of level i), or more
/// (multi_pop of level i).
enum class EffectKind : std::uint8_t { noop, pop, multi_pop, push };

struct Effect {
    EffectKind kind = EffectKind::noop;
    int level = 0; ///< 0 for noop
};

std::vector<Effect> step_effects(const Run& run);

/// True when some step is a collapse removing two or more stacks; such runs
/// lie outside the setting of the decomposition propositions.
bool has_multi_pop(const Run& run);

enum class NodeKind : std::uint8_t {
    return_pop,      ///< single pop^r
    return_prefix,   ///< leading step that leaves the r-return structure intact, then an r-return
    return_compose,  ///< push^k (k >= r), then a k-return, then an r-return
    upper_low,       ///< only operations of level <= k
    upper_push,      ///< single push^r with r > k
    upper_push_return, ///< push^r (r > k) followed by an r-return
    upper_compose    ///< two nonempty k-upper runs
};

const char* to_string(NodeKind k);

struct DecompositionTree {
    NodeKind kind = NodeKind::return_pop;
    std::size_t from = 0;
    std::size_t to = 0;
    int level = 0;                   ///< r for returns, k for upper runs
    std::optional<std::size_t> split; ///< split index for compositions
    std::vector<DecompositionTree> children;
};

/// Derivation-based characterizations of returns and upper runs, computed by
/// dynamic programming over subruns. Independent of copy lineage.
class Decomposer {
public:
    explicit Decomposer(const Run& run);

    bool is_return(std::size_t i, std::size_t j, int r);
    bool is_upper(std::size_t i, std::size_t j, int k);

    std::optional<DecompositionTree> decompose_return(std::size_t i, std::size_t j, int r);
    std::optional<DecompositionTree> decompose_upper(std::size_t i, std::size_t j, int k);

private:
    enum : std::int8_t { unknown = -1 };
    std::int8_t& memo(std::vector<std::int8_t>& table, std::size_t i, std::size_t j, int level);

    std::vector<Effect> effects_;
    int n_;
    std::size_t m_;
    std::vector<std::int8_t> ret_;
    std::vector<std::int8_t> up_;
};

std::optional<DecompositionTree> decompose_return(const Run& run, int r);
std::optional<DecompositionTree> decompose_upper(const Run& run, int k);

std::string render_tree(const DecompositionTree& t);

} // namespace hopad
