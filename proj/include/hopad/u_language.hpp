#pragma once

#include "hopad/automaton.hpp"
#include "hopad/text_format.hpp"

#include <string>
#include <string_view>

namespace hopad {

enum class UCondition : std::uint8_t { none, dollar_count, bracket_wellformedness, suffix_symmetry };

const char* to_string(UCondition c);

struct UMembershipReport {
    bool member = false;
    UCondition failed_condition = UCondition::none;
};

/// Direct membership test for U. The suffix after the dollar must mirror the
/// prefix that ends at the last unmatched opening bracket before the dollar:
/// the i-th letter from the start and the i-th from the end carry equal data
/// and opposite brackets. Throws std::invalid_argument on foreign letters.
UMembershipReport in_u(const DataWord& w);

/// The level-2 collapsible recognizer of U.
AutomatonDescription u_recognizer_description();
Automaton build_u_recognizer();

/// w_0 = "[][", w_{k+1} = w_k^N ]^N [. Throws std::length_error when k > 6
/// or the result would exceed `max_length`.
std::string gen_w(unsigned k, unsigned n, std::size_t max_length = std::size_t{1} << 24);

/// Length of gen_w(k, n) without building it.
std::size_t gen_w_length(unsigned k, unsigned n);

/// Gives the i-th letter (1-based) the data value i.
DataWord decorate_distinct(std::string_view w);

} // namespace hopad
