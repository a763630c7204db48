#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopad {

class Run;

using MonoidElement = std::uint32_t;

/// A finite monoid given by its multiplication table, together with the
/// images of the input letters.
class FiniteMonoid {
public:
    FiniteMonoid(std::vector<std::string> element_names, MonoidElement identity,
                 std::vector<std::vector<MonoidElement>> table, std::vector<std::string> letters,
                 std::vector<MonoidElement> letter_map);

    std::size_t size() const noexcept { return names_.size(); }
    MonoidElement identity() const noexcept { return identity_; }
    MonoidElement multiply(MonoidElement a, MonoidElement b) const { return table_[a][b]; }
    const std::string& name(MonoidElement e) const { return names_.at(e); }
    std::optional<MonoidElement> element(std::string_view name) const;

    const std::vector<std::string>& letters() const noexcept { return letters_; }
    const std::vector<std::vector<MonoidElement>>& table() const noexcept { return table_; }

    /// Image of a letter; throws std::invalid_argument on unknown letters.
    MonoidElement letter_image(std::string_view letter) const;

    /// Image of a letter id of an automaton whose input alphabet has been
    /// bound with `bind`.
    MonoidElement image(std::uint32_t letter_id) const { return bound_.at(letter_id); }

    /// Resolves the letter map against an automaton alphabet (letters absent
    /// from the monoid's map raise std::invalid_argument).
    void bind(const std::vector<std::string>& input_alphabet);

private:
    std::vector<std::string> names_;
    MonoidElement identity_;
    std::vector<std::vector<MonoidElement>> table_;
    std::vector<std::string> letters_;
    std::vector<MonoidElement> letter_map_;
    std::vector<MonoidElement> bound_;
};

struct MonoidViolation {
    std::string law;
    std::string detail;
};

/// Closure, identity and associativity of the table, and letter map range.
std::vector<MonoidViolation> validate_monoid(const FiniteMonoid& m);

/// {ID, CLOSE, DOLLAR, OTHER} over the alphabet {[, ], $}: empty word,
/// single closing bracket, dollar-initial word, anything else.
FiniteMonoid shape_monoid();

/// The one-element monoid over the given letters.
FiniteMonoid trivial_monoid(const std::vector<std::string>& letters);

/// Builds a monoid by name ("shape" or "trivial"); throws on unknown names.
FiniteMonoid monoid_by_name(std::string_view name, const std::vector<std::string>& letters);

/// Left fold of the letter images; letters are given by name.
MonoidElement classify_word(const FiniteMonoid& m, const std::vector<std::string>& word);

/// Convenience for single-character letters.
MonoidElement classify_string(const FiniteMonoid& m, std::string_view word);

/// phi of the word read by the run; the monoid must be bound.
MonoidElement phi_of_run(const FiniteMonoid& m, const Run& run);

} // namespace hopad
