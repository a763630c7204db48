#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace hopad {

using SymbolId = std::uint32_t;
using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// A data value from the infinite alphabet, or the NoData marker.
///
/// Only equality is observable. The value 0 is an ordinary data value that
/// normalized runs use for every letter-reading push.
class DataValue {
public:
    constexpr DataValue() noexcept = default;

    static constexpr DataValue none() noexcept { return DataValue{}; }
    static constexpr DataValue of(std::uint64_t v) noexcept
    {
        DataValue d;
        d.present_ = true;
        d.value_ = v;
        return d;
    }

    constexpr bool has_value() const noexcept { return present_; }
    std::uint64_t value() const
    {
        if (!present_) throw std::logic_error("DataValue::value on NoData");
        return value_;
    }

    constexpr auto operator<=>(const DataValue&) const = default;

private:
    bool present_ = false;
    std::uint64_t value_ = 0;
};

/// A 0-stack. `links` is empty for non-collapsible automata and holds
/// (k_1, ..., k_n) otherwise.
struct Atom {
    SymbolId symbol = 0;
    DataValue data;
    std::vector<std::uint32_t> links;

    bool operator==(const Atom&) const = default;
};

/// Persistent nested stack. Level 0 is an atom; level k >= 1 is a sequence
/// of level-(k-1) stacks with the top at the back. Copies share structure
/// and every modifier returns a new value.
class Stack {
public:
    static Stack atom(Atom a);
    static Stack empty(int level);
    static Stack of(int level, std::vector<Stack> items);

    int level() const noexcept { return level_; }
    bool is_atom() const noexcept { return level_ == 0; }
    const Atom& as_atom() const;

    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::span<const Stack> items() const;
    const Stack& operator[](std::size_t i) const { return items()[i]; }
    const Stack& top() const;

    Stack pushed(Stack s) const;
    Stack popped() const;
    Stack with_top(Stack s) const;
    Stack truncated(std::size_t keep) const;

    /// Address of the shared node; equal identities imply equal contents.
    const void* identity() const noexcept { return node_.get(); }

    bool operator==(const Stack& other) const;

private:
    struct Node {
        Atom atom;
        std::vector<Stack> items;
    };

    Stack(int level, std::shared_ptr<const Node> node) : level_(level), node_(std::move(node)) {}

    int level_ = 0;
    std::shared_ptr<const Node> node_;
};

std::size_t hash_value(const Stack& s);

struct StackHash {
    std::size_t operator()(const Stack& s) const { return hash_value(s); }
};

const Atom& top_atom(const Stack& s);

/// The topmost k-stack of `s` (k <= s.level()).
const Stack& topmost(const Stack& s, int k);

/// Replaces the topmost k-stack of `s`.
Stack replace_topmost(const Stack& s, int k, Stack replacement);

/// Every contained stack of level >= 1, including `s` itself, is nonempty.
bool well_formed(const Stack& s);

/// Data values stored anywhere in `s` (NoData excluded), with repetitions.
std::vector<std::uint64_t> data_values(const Stack& s);
bool contains_value(const Stack& s, std::uint64_t v);

/// Decomposition s = s^n : s^{n-1} : ... : s^k. Piece s^i (k <= i <= n)
/// is, for i > k, the topmost i-stack without its topmost (i-1)-stack, and
/// s^k is the topmost k-stack.
struct Spine {
    int k = 0;
    std::vector<Stack> pieces; ///< pieces[i - k] = s^i

    int n() const { return k + static_cast<int>(pieces.size()) - 1; }
    const Stack& operator[](int level) const { return pieces[static_cast<std::size_t>(level - k)]; }
};

Spine spine(const Stack& s, int k);

/// Recomposes s^n : ... : s^k.
Stack compose(const Spine& sp);

/// The stack s^i : s^{i-1} : ... : s^k (the topmost i-stack).
Stack compose_from(const Spine& sp, int i);

// ---------------------------------------------------------------------------
// Operations

enum class OpKind : std::uint8_t { pop, push, collapse };

struct Operation {
    OpKind kind = OpKind::pop;
    int level = 1;
    SymbolId symbol = 0; ///< pushed symbol, push only

    static Operation pop(int k) { return {OpKind::pop, k, 0}; }
    static Operation push(int k, SymbolId beta) { return {OpKind::push, k, beta}; }
    static Operation collapse(int i) { return {OpKind::collapse, i, 0}; }

    bool operator==(const Operation&) const = default;
};

enum class OpError : std::uint8_t { none, ill_formed, collapse_unavailable };

const char* to_string(OpError e);

struct OpResult {
    std::optional<Stack> stack;
    OpError error = OpError::none;

    explicit operator bool() const { return stack.has_value(); }
};

/// Applies `op` to a well-formed level-n stack. A push stores `d` in the new
/// topmost atom and, when the stack carries links, records the sizes of the
/// topmost i-stacks after the operation.
OpResult apply_operation(const Stack& stack, const Operation& op, DataValue d);

/// The n-stack holding only (symbol, NoData); links (1,...,1) if collapsible.
Stack initial_stack(int n, SymbolId symbol, bool collapsible);

} // namespace hopad
