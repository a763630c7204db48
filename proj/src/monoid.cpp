#include "hopad/monoid.hpp"
#include "hopad/run.hpp"

#include <algorithm>
#include <stdexcept>

namespace hopad {

FiniteMonoid::FiniteMonoid(std::vector<std::string> element_names, MonoidElement identity,
                           std::vector<std::vector<MonoidElement>> table, std::vector<std::string> letters,
                           std::vector<MonoidElement> letter_map)
    : names_(std::move(element_names)),
      identity_(identity),
      table_(std::move(table)),
      letters_(std::move(letters)),
      letter_map_(std::move(letter_map))
{
    if (names_.empty()) throw std::invalid_argument("monoid: empty carrier");
    if (letters_.size() != letter_map_.size()) throw std::invalid_argument("monoid: letter map size mismatch");
}

std::optional<MonoidElement> FiniteMonoid::element(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<MonoidElement>(it - names_.begin());
}

MonoidElement FiniteMonoid::letter_image(std::string_view letter) const
{
    auto it = std::find(letters_.begin(), letters_.end(), letter);
    if (it == letters_.end()) throw std::invalid_argument("monoid: unknown letter '" + std::string(letter) + "'");
    return letter_map_[static_cast<std::size_t>(it - letters_.begin())];
}

void FiniteMonoid::bind(const std::vector<std::string>& input_alphabet)
{
    std::vector<MonoidElement> b;
    b.reserve(input_alphabet.size());
    for (const auto& a : input_alphabet) b.push_back(letter_image(a));
    bound_ = std::move(b);
}

std::vector<MonoidViolation> validate_monoid(const FiniteMonoid& m)
{
    std::vector<MonoidViolation> out;
    const auto n = m.size();
    const auto& t = m.table();
    if (m.identity() >= n) out.push_back({"identity", "identity element out of range"});
    if (t.size() != n) {
        out.push_back({"closure", "table has " + std::to_string(t.size()) + " rows for " + std::to_string(n) + " elements"});
        return out;
    }
    for (std::size_t a = 0; a < n; ++a) {
        if (t[a].size() != n) {
            out.push_back({"closure", "row " + m.name(static_cast<MonoidElement>(a)) + " has wrong width"});
            return out;
        }
        for (std::size_t b = 0; b < n; ++b)
            if (t[a][b] >= n)
                out.push_back({"closure", m.name(static_cast<MonoidElement>(a)) + "*" + m.name(static_cast<MonoidElement>(b)) +
                                              " is outside the carrier"});
    }
    if (!out.empty()) return out;
    if (m.identity() < n) {
        for (MonoidElement a = 0; a < n; ++a) {
            if (m.multiply(m.identity(), a) != a) out.push_back({"left-identity", "1*" + m.name(a) + " != " + m.name(a)});
            if (m.multiply(a, m.identity()) != a) out.push_back({"right-identity", m.name(a) + "*1 != " + m.name(a)});
        }
    }
    for (MonoidElement a = 0; a < n; ++a)
        for (MonoidElement b = 0; b < n; ++b)
            for (MonoidElement c = 0; c < n; ++c)
                if (m.multiply(m.multiply(a, b), c) != m.multiply(a, m.multiply(b, c)))
                    out.push_back({"associativity", "(" + m.name(a) + "," + m.name(b) + "," + m.name(c) + ")"});
    for (const auto& l : m.letters())
        if (m.letter_image(l) >= n) out.push_back({"letter-map", "image of '" + l + "' is outside the carrier"});
    return out;
}

FiniteMonoid shape_monoid()
{
    enum : MonoidElement { id = 0, close = 1, dollar = 2, other = 3 };
    std::vector<std::vector<MonoidElement>> t(4, std::vector<MonoidElement>(4));
    for (MonoidElement b = 0; b < 4; ++b) {
        t[id][b] = b;
        t[dollar][b] = dollar;
        t[other][b] = other;
        t[close][b] = b == id ? close : other;
    }
    return FiniteMonoid({"ID", "CLOSE", "DOLLAR", "OTHER"}, id, std::move(t), {"[", "]", "$"}, {other, close, dollar});
}

FiniteMonoid trivial_monoid(const std::vector<std::string>& letters)
{
    return FiniteMonoid({"1"}, 0, {{0}}, letters, std::vector<MonoidElement>(letters.size(), 0));
}

FiniteMonoid monoid_by_name(std::string_view name, const std::vector<std::string>& letters)
{
    if (name == "shape") return shape_monoid();
    if (name == "trivial") return trivial_monoid(letters);
    throw std::invalid_argument("unknown monoid '" + std::string(name) + "' (expected shape or trivial)");
}

MonoidElement classify_word(const FiniteMonoid& m, const std::vector<std::string>& word)
{
    MonoidElement acc = m.identity();
    for (const auto& a : word) acc = m.multiply(acc, m.letter_image(a));
    return acc;
}

MonoidElement classify_string(const FiniteMonoid& m, std::string_view word)
{
    MonoidElement acc = m.identity();
    for (char c : word) acc = m.multiply(acc, m.letter_image(std::string_view(&c, 1)));
    return acc;
}

MonoidElement phi_of_run(const FiniteMonoid& m, const Run& run)
{
    MonoidElement acc = m.identity();
    for (const auto& s : run.steps())
        if (!s.label.is_eps()) acc = m.multiply(acc, m.image(*s.label.letter));
    return acc;
}

} // namespace hopad
