#include "hopad/stack.hpp"

#include <algorithm>
#include <functional>

namespace hopad {

Stack Stack::atom(Atom a)
{
    return Stack(0, std::make_shared<const Node>(Node{std::move(a), {}}));
}

Stack Stack::empty(int level)
{
    if (level < 1) throw std::invalid_argument("Stack::empty: level must be >= 1");
    return Stack(level, std::make_shared<const Node>());
}

Stack Stack::of(int level, std::vector<Stack> items)
{
    if (level < 1) throw std::invalid_argument("Stack::of: level must be >= 1");
    for (const auto& s : items)
        if (s.level() != level - 1) throw std::invalid_argument("Stack::of: item level mismatch");
    return Stack(level, std::make_shared<const Node>(Node{{}, std::move(items)}));
}

const Atom& Stack::as_atom() const
{
    if (level_ != 0) throw std::logic_error("Stack::as_atom on a level >= 1 stack");
    return node_->atom;
}

std::size_t Stack::size() const
{
    if (level_ == 0) throw std::logic_error("Stack::size on a 0-stack");
    return node_->items.size();
}

std::span<const Stack> Stack::items() const
{
    if (level_ == 0) return {};
    return node_->items;
}

const Stack& Stack::top() const
{
    if (level_ == 0 || node_->items.empty()) throw std::logic_error("Stack::top on empty or atomic stack");
    return node_->items.back();
}

Stack Stack::pushed(Stack s) const
{
    if (s.level() != level_ - 1) throw std::invalid_argument("Stack::pushed: level mismatch");
    auto items = node_->items;
    items.push_back(std::move(s));
    return Stack(level_, std::make_shared<const Node>(Node{{}, std::move(items)}));
}

Stack Stack::popped() const
{
    if (level_ == 0 || node_->items.empty()) throw std::logic_error("Stack::popped on empty or atomic stack");
    auto items = node_->items;
    items.pop_back();
    return Stack(level_, std::make_shared<const Node>(Node{{}, std::move(items)}));
}

Stack Stack::with_top(Stack s) const
{
    if (level_ == 0 || node_->items.empty()) throw std::logic_error("Stack::with_top on empty or atomic stack");
    auto items = node_->items;
    items.back() = std::move(s);
    return Stack(level_, std::make_shared<const Node>(Node{{}, std::move(items)}));
}

Stack Stack::truncated(std::size_t keep) const
{
    if (level_ == 0 || keep > node_->items.size()) throw std::logic_error("Stack::truncated out of range");
    std::vector<Stack> items(node_->items.begin(), node_->items.begin() + static_cast<std::ptrdiff_t>(keep));
    return Stack(level_, std::make_shared<const Node>(Node{{}, std::move(items)}));
}

bool Stack::operator==(const Stack& other) const
{
    if (level_ != other.level_) return false;
    if (node_ == other.node_) return true;
    if (level_ == 0) return node_->atom == other.node_->atom;
    return node_->items == other.node_->items;
}

std::size_t hash_value(const Stack& s)
{
    auto mix = [](std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); };
    std::size_t h = static_cast<std::size_t>(s.level());
    if (s.is_atom()) {
        const Atom& a = s.as_atom();
        h = mix(h, a.symbol);
        h = mix(h, a.data.has_value() ? a.data.value() + 1 : 0);
        for (auto l : a.links) h = mix(h, l);
        return h;
    }
    for (const auto& item : s.items()) h = mix(h, hash_value(item));
    return mix(h, s.size());
}

const Atom& top_atom(const Stack& s)
{
    const Stack* cur = &s;
    while (!cur->is_atom()) cur = &cur->top();
    return cur->as_atom();
}

const Stack& topmost(const Stack& s, int k)
{
    if (k < 0 || k > s.level()) throw std::out_of_range("topmost: level out of range");
    const Stack* cur = &s;
    while (cur->level() > k) cur = &cur->top();
    return *cur;
}

Stack replace_topmost(const Stack& s, int k, Stack replacement)
{
    if (s.level() == k) return replacement;
    return s.with_top(replace_topmost(s.top(), k, std::move(replacement)));
}

bool well_formed(const Stack& s)
{
    if (s.is_atom()) return true;
    if (s.empty()) return false;
    return std::all_of(s.items().begin(), s.items().end(), [](const Stack& c) { return well_formed(c); });
}

namespace {

void collect_values(const Stack& s, std::vector<std::uint64_t>& out)
{
    if (s.is_atom()) {
        if (s.as_atom().data.has_value()) out.push_back(s.as_atom().data.value());
        return;
    }
    for (const auto& c : s.items()) collect_values(c, out);
}

} // namespace

std::vector<std::uint64_t> data_values(const Stack& s)
{
    std::vector<std::uint64_t> out;
    collect_values(s, out);
    return out;
}

bool contains_value(const Stack& s, std::uint64_t v)
{
    if (s.is_atom()) return s.as_atom().data == DataValue::of(v);
    return std::any_of(s.items().begin(), s.items().end(), [v](const Stack& c) { return contains_value(c, v); });
}

Spine spine(const Stack& s, int k)
{
    const int n = s.level();
    if (k < 0 || k > n) throw std::out_of_range("spine: level out of range");
    Spine sp;
    sp.k = k;
    sp.pieces.resize(static_cast<std::size_t>(n - k + 1), Stack::empty(1));
    const Stack* cur = &s;
    for (int i = n; i > k; --i) {
        sp.pieces[static_cast<std::size_t>(i - k)] = cur->popped();
        cur = &cur->top();
    }
    sp.pieces[0] = *cur;
    return sp;
}

Stack compose_from(const Spine& sp, int i)
{
    Stack acc = sp[sp.k];
    for (int level = sp.k + 1; level <= i; ++level) acc = sp[level].pushed(std::move(acc));
    return acc;
}

Stack compose(const Spine& sp)
{
    return compose_from(sp, sp.n());
}

const char* to_string(OpError e)
{
    switch (e) {
    case OpError::none: return "none";
    case OpError::ill_formed: return "ill-formed";
    case OpError::collapse_unavailable: return "collapse-unavailable";
    }
    return "?";
}

namespace {

Stack modify_topmost(const Stack& s, int k, const std::function<Stack(const Stack&)>& f)
{
    if (s.level() == k) return f(s);
    return s.with_top(modify_topmost(s.top(), k, f));
}

} // namespace

OpResult apply_operation(const Stack& stack, const Operation& op, DataValue d)
{
    const int n = stack.level();
    if (op.level < 1 || op.level > n) return {std::nullopt, OpError::ill_formed};
    const Atom& top = top_atom(stack);
    const bool collapsible = !top.links.empty();

    switch (op.kind) {
    case OpKind::pop: {
        const Stack& target = topmost(stack, op.level);
        if (target.size() < 2) return {std::nullopt, OpError::ill_formed};
        return {replace_topmost(stack, op.level, target.popped()), OpError::none};
    }
    case OpKind::push: {
        const int k = op.level;
        Atom fresh{op.symbol, d, {}};
        if (collapsible) {
            fresh.links.resize(static_cast<std::size_t>(n));
            for (int i = 1; i <= n; ++i) {
                auto size = static_cast<std::uint32_t>(topmost(stack, i).size());
                fresh.links[static_cast<std::size_t>(i - 1)] = i == k ? size + 1 : size;
            }
        }
        Stack copy = replace_topmost(topmost(stack, k).top(), 0, Stack::atom(std::move(fresh)));
        return {modify_topmost(stack, k, [&](const Stack& t) { return t.pushed(copy); }), OpError::none};
    }
    case OpKind::collapse: {
        if (!collapsible) return {std::nullopt, OpError::collapse_unavailable};
        const std::uint32_t link = top.links[static_cast<std::size_t>(op.level - 1)];
        const Stack& target = topmost(stack, op.level);
        if (link < 2 || link - 1 > target.size()) return {std::nullopt, OpError::ill_formed};
        return {replace_topmost(stack, op.level, target.truncated(link - 1)), OpError::none};
    }
    }
    return {std::nullopt, OpError::ill_formed};
}

Stack initial_stack(int n, SymbolId symbol, bool collapsible)
{
    if (n < 1) throw std::invalid_argument("initial_stack: level must be >= 1");
    Atom a{symbol, DataValue::none(), {}};
    if (collapsible) a.links.assign(static_cast<std::size_t>(n), 1);
    Stack s = Stack::atom(std::move(a));
    for (int level = 1; level <= n; ++level) s = Stack::of(level, {std::move(s)});
    return s;
}

} // namespace hopad
