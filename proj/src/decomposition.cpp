#include "hopad/decomposition.hpp"

#include <sstream>
#include <stdexcept>

namespace hopad {

std::vector<Effect> step_effects(const Run& run)
{
    std::vector<Effect> out;
    out.reserve(run.length());
    for (std::size_t t = 0; t < run.length(); ++t) {
        const Operation& op = run.step_at(t).transition.op;
        switch (op.kind) {
        case OpKind::pop: out.push_back({EffectKind::pop, op.level}); break;
        case OpKind::push: out.push_back({EffectKind::push, op.level}); break;
        case OpKind::collapse: {
            const std::size_t before = topmost(run.at(t).stack, op.level).size();
            const std::size_t after = topmost(run.at(t + 1).stack, op.level).size();
            const std::size_t removed = before - after;
            if (removed == 0)
                out.push_back({EffectKind::noop, 0});
            else if (removed == 1)
                out.push_back({EffectKind::pop, op.level});
            else
                out.push_back({EffectKind::multi_pop, op.level});
            break;
        }
        }
    }
    return out;
}

bool has_multi_pop(const Run& run)
{
    for (const auto& e : step_effects(run))
        if (e.kind == EffectKind::multi_pop) return true;
    return false;
}

const char* to_string(NodeKind k)
{
    switch (k) {
    case NodeKind::return_pop: return "return-pop";
    case NodeKind::return_prefix: return "return-prefix";
    case NodeKind::return_compose: return "return-compose";
    case NodeKind::upper_low: return "upper-low";
    case NodeKind::upper_push: return "upper-push";
    case NodeKind::upper_push_return: return "upper-push-return";
    case NodeKind::upper_compose: return "upper-compose";
    }
    return "?";
}

Decomposer::Decomposer(const Run& run)
    : effects_(step_effects(run)), n_(run.first().stack.level()), m_(run.length())
{
    const std::size_t cells = (m_ + 1) * (m_ + 1) * static_cast<std::size_t>(n_ + 1);
    ret_.assign(cells, unknown);
    up_.assign(cells, unknown);
}

std::int8_t& Decomposer::memo(std::vector<std::int8_t>& table, std::size_t i, std::size_t j, int level)
{
    return table[(i * (m_ + 1) + j) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(level)];
}

namespace {

bool prefix_step(const Effect& e, int r)
{
    switch (e.kind) {
    case EffectKind::noop: return true;
    case EffectKind::pop:
    case EffectKind::multi_pop: return e.level < r;
    case EffectKind::push: return e.level != r;
    }
    return false;
}

} // namespace

bool Decomposer::is_return(std::size_t i, std::size_t j, int r)
{
    if (i > j || j > m_ || r < 1 || r > n_) throw std::out_of_range("Decomposer::is_return: bad arguments");
    if (j == i) return false;
    auto& cell = memo(ret_, i, j, r);
    if (cell != unknown) return cell != 0;
    const Effect& e = effects_[i];
    bool res = false;
    if (j == i + 1 && e.kind == EffectKind::pop && e.level == r) res = true;
    if (!res && prefix_step(e, r)) res = is_return(i + 1, j, r);
    if (!res && e.kind == EffectKind::push && e.level >= r)
        for (std::size_t mid = i + 2; mid < j && !res; ++mid) res = is_return(i + 1, mid, e.level) && is_return(mid, j, r);
    cell = res ? 1 : 0;
    return res;
}

bool Decomposer::is_upper(std::size_t i, std::size_t j, int k)
{
    if (i > j || j > m_ || k < 0 || k > n_) throw std::out_of_range("Decomposer::is_upper: bad arguments");
    auto& cell = memo(up_, i, j, k);
    if (cell != unknown) return cell != 0;
    bool res = true;
    for (std::size_t t = i; t < j && res; ++t) res = effects_[t].level <= k;
    if (!res && j > i) {
        const Effect& e = effects_[i];
        const bool high_push = e.kind == EffectKind::push && e.level >= k + 1;
        if (high_push && j == i + 1) res = true;
        if (!res && high_push) res = is_return(i + 1, j, e.level);
        for (std::size_t mid = i + 1; mid < j && !res; ++mid) res = is_upper(i, mid, k) && is_upper(mid, j, k);
    }
    cell = res ? 1 : 0;
    return res;
}

std::optional<DecompositionTree> Decomposer::decompose_return(std::size_t i, std::size_t j, int r)
{
    if (!is_return(i, j, r)) return std::nullopt;
    const Effect& e = effects_[i];
    DecompositionTree t;
    t.from = i;
    t.to = j;
    t.level = r;
    if (j == i + 1 && e.kind == EffectKind::pop && e.level == r) {
        t.kind = NodeKind::return_pop;
        return t;
    }
    if (prefix_step(e, r) && is_return(i + 1, j, r)) {
        t.kind = NodeKind::return_prefix;
        t.children.push_back(*decompose_return(i + 1, j, r));
        return t;
    }
    for (std::size_t mid = i + 2; mid < j; ++mid) {
        if (is_return(i + 1, mid, e.level) && is_return(mid, j, r)) {
            t.kind = NodeKind::return_compose;
            t.split = mid;
            t.children.push_back(*decompose_return(i + 1, mid, e.level));
            t.children.push_back(*decompose_return(mid, j, r));
            return t;
        }
    }
    throw std::logic_error("decompose_return: inconsistent memo");
}

std::optional<DecompositionTree> Decomposer::decompose_upper(std::size_t i, std::size_t j, int k)
{
    if (!is_upper(i, j, k)) return std::nullopt;
    DecompositionTree t;
    t.from = i;
    t.to = j;
    t.level = k;
    bool low = true;
    for (std::size_t s = i; s < j && low; ++s) low = effects_[s].level <= k;
    if (low) {
        t.kind = NodeKind::upper_low;
        return t;
    }
    const Effect& e = effects_[i];
    const bool high_push = e.kind == EffectKind::push && e.level >= k + 1;
    if (high_push && j == i + 1) {
        t.kind = NodeKind::upper_push;
        return t;
    }
    if (high_push && is_return(i + 1, j, e.level)) {
        t.kind = NodeKind::upper_push_return;
        t.children.push_back(*decompose_return(i + 1, j, e.level));
        return t;
    }
    for (std::size_t mid = i + 1; mid < j; ++mid) {
        if (is_upper(i, mid, k) && is_upper(mid, j, k)) {
            t.kind = NodeKind::upper_compose;
            t.split = mid;
            t.children.push_back(*decompose_upper(i, mid, k));
            t.children.push_back(*decompose_upper(mid, j, k));
            return t;
        }
    }
    throw std::logic_error("decompose_upper: inconsistent memo");
}

std::optional<DecompositionTree> decompose_return(const Run& run, int r)
{
    Decomposer d(run);
    return d.decompose_return(0, run.length(), r);
}

std::optional<DecompositionTree> decompose_upper(const Run& run, int k)
{
    Decomposer d(run);
    return d.decompose_upper(0, run.length(), k);
}

namespace {

void render_into(std::ostringstream& os, const DecompositionTree& t)
{
    os << '(' << to_string(t.kind) << ' ' << t.level << " [" << t.from << ',' << t.to << ']';
    for (const auto& c : t.children) {
        os << ' ';
        render_into(os, c);
    }
    os << ')';
}

} // namespace

std::string render_tree(const DecompositionTree& t)
{
    std::ostringstream os;
    render_into(os, t);
    return os.str();
}

} // namespace hopad
