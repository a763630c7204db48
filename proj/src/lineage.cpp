#include "hopad/lineage.hpp"

#include <memory>
#include <stdexcept>

namespace hopad {

namespace {

struct IdNode {
    LineageId id = 0;
    std::vector<std::unique_ptr<IdNode>> kids;
};

} // namespace

LineageRun::LineageRun(Run run) : run_(std::move(run)), n_(run_.first().stack.level())
{
    auto fresh = [&](LineageId parent, std::size_t birth) {
        ids_.push_back({parent, birth, npos});
        return static_cast<LineageId>(ids_.size() - 1);
    };

    // Mirror of the initial stack.
    auto build = [&](auto& self, const Stack& s) -> std::unique_ptr<IdNode> {
        auto node = std::make_unique<IdNode>();
        node->id = fresh(no_id, 0);
        for (const auto& c : s.items()) node->kids.push_back(self(self, c));
        return node;
    };
    std::unique_ptr<IdNode> root = build(build, run_.first().stack);

    auto kill = [&](auto& self, const IdNode& node, std::size_t when) -> void {
        ids_[node.id].death = when;
        for (const auto& c : node.kids) self(self, *c, when);
    };
    auto copy = [&](auto& self, const IdNode& node, std::size_t when) -> std::unique_ptr<IdNode> {
        auto out = std::make_unique<IdNode>();
        out->id = fresh(node.id, when);
        for (const auto& c : node.kids) out->kids.push_back(self(self, *c, when));
        return out;
    };
    auto topmost_node = [&](int k) {
        IdNode* cur = root.get();
        for (int l = n_; l > k; --l) cur = cur->kids.back().get();
        return cur;
    };
    auto snapshot = [&]() {
        Snapshot s;
        s.top.assign(static_cast<std::size_t>(n_ + 1), no_id);
        s.second.assign(static_cast<std::size_t>(n_ + 1), no_id);
        s.size.assign(static_cast<std::size_t>(n_ + 1), 0);
        const IdNode* cur = root.get();
        for (int l = n_; l >= 0; --l) {
            const auto k = static_cast<std::size_t>(l);
            s.top[k] = cur->id;
            if (l == 0) break;
            s.size[k] = cur->kids.size();
            if (cur->kids.size() >= 2) s.second[k] = cur->kids[cur->kids.size() - 2]->id;
            cur = cur->kids.back().get();
        }
        return s;
    };

    snaps_.push_back(snapshot());
    for (std::size_t t = 0; t < run_.length(); ++t) {
        const Operation& op = run_.step_at(t).transition.op;
        IdNode* target = topmost_node(op.level);
        switch (op.kind) {
        case OpKind::pop:
            kill(kill, *target->kids.back(), t + 1);
            target->kids.pop_back();
            break;
        case OpKind::push:
            target->kids.push_back(copy(copy, *target->kids.back(), t + 1));
            break;
        case OpKind::collapse: {
            const std::size_t keep = topmost(run_.at(t + 1).stack, op.level).size();
            while (target->kids.size() > keep) {
                kill(kill, *target->kids.back(), t + 1);
                target->kids.pop_back();
            }
            break;
        }
        }
        snaps_.push_back(snapshot());
        for (int k = 1; k <= n_; ++k)
            if (snaps_.back().size[static_cast<std::size_t>(k)] != topmost(run_.at(t + 1).stack, k).size())
                throw std::logic_error("LineageRun: id tree out of sync with the run");
    }
}

std::optional<LineageId> LineageRun::second_id(std::size_t t, int k) const
{
    LineageId id = snaps_.at(t).second.at(static_cast<std::size_t>(k));
    if (id == no_id) return std::nullopt;
    return id;
}

std::optional<LineageId> LineageRun::copy_of(LineageId id) const
{
    LineageId p = ids_.at(id).parent;
    if (p == no_id) return std::nullopt;
    return p;
}

bool LineageRun::descends(LineageId id, LineageId ancestor) const
{
    for (LineageId cur = id; cur != no_id; cur = ids_[cur].parent)
        if (cur == ancestor) return true;
    return false;
}

bool LineageRun::descends_since(LineageId id, LineageId ancestor, std::size_t t) const
{
    for (LineageId cur = id; cur != ancestor; cur = ids_[cur].parent)
        if (cur == no_id || ids_[cur].birth <= t) return false;
    return true;
}

bool is_k_upper(const LineageRun& lr, std::size_t i, std::size_t j, int k)
{
    if (i > j || j > lr.length() || k < 0 || k > lr.level()) throw std::out_of_range("is_k_upper: bad arguments");
    return lr.descends_since(lr.top_id(j, k), lr.top_id(i, k), i);
}

bool is_k_return(const LineageRun& lr, std::size_t i, std::size_t j, int k)
{
    if (i > j || j > lr.length() || k < 1 || k > lr.level()) throw std::out_of_range("is_k_return: bad arguments");
    if (j == i) return false;
    auto second = lr.second_id(i, k);
    if (!second) return false;
    const LineageId final_top = lr.top_id(j, k - 1);
    if (!lr.descends_since(final_top, *second, i)) return false;

    // The copy chain from the initial second topmost (k-1)-stack to the
    // final topmost one, newest first.
    std::vector<LineageId> chain;
    for (LineageId cur = final_top;; cur = *lr.copy_of(cur)) {
        chain.push_back(cur);
        if (cur == *second) break;
    }
    for (std::size_t t = i; t < j; ++t) {
        std::optional<LineageId> rep;
        for (LineageId c : chain)
            if (lr.alive(c, t)) {
                rep = c;
                break;
            }
        if (!rep || *rep == lr.top_id(t, k - 1)) return false;
    }
    return true;
}

bool is_k_return_remark(const LineageRun& lr, std::size_t i, std::size_t j, int k)
{
    if (i > j || j > lr.length() || k < 1 || k > lr.level()) throw std::out_of_range("is_k_return_remark: bad arguments");
    if (j == i) return false;
    auto second = lr.second_id(i, k);
    if (!second || !is_k_upper(lr, i, j, k)) return false;
    if (!lr.descends_since(lr.top_id(j, k - 1), *second, i)) return false;
    const LineageId removed = lr.top_id(j - 1, k - 1);
    return lr.death(removed) == j && lr.descends_since(removed, lr.top_id(i, k - 1), i);
}

ClassificationTable classification_table(const LineageRun& lr)
{
    ClassificationTable t;
    t.n = lr.level();
    const std::size_t m = lr.length();
    const auto levels = static_cast<std::size_t>(t.n + 1);
    t.upper.assign(m + 1, std::vector<std::vector<std::size_t>>(levels));
    t.returns.assign(m + 1, std::vector<std::vector<std::size_t>>(levels));
    for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            for (int k = 0; k <= t.n; ++k) {
                if (is_k_upper(lr, i, j, k)) t.upper[j][static_cast<std::size_t>(k)].push_back(i);
                if (k >= 1 && is_k_return(lr, i, j, k)) t.returns[j][static_cast<std::size_t>(k)].push_back(i);
            }
    return t;
}

} // namespace hopad
