#include "hopad/u_language.hpp"

#include "hopad/run.hpp"

#include <doctest.h>

using namespace hopad;

namespace {

UMembershipReport u(const char* w) { return in_u(parse_data_word(w)); }

bool recognized(const Automaton& aut, const char* w)
{
    return execute_word(aut, to_input_word(aut, parse_data_word(w))).accepted();
}

} // namespace

TEST_SUITE("u-language")
{
    TEST_CASE("membership oracle")
    {
        CHECK(u("$@0").member);
        CHECK(u("[@1 $@0 ]@1").member);
        CHECK(u("[@1 [@2 ]@2 $@0 ]@1").member);
        CHECK(u("[@1 $@0 ]@2").failed_condition == UCondition::suffix_symmetry);
        CHECK(u("[@1 ]@1").failed_condition == UCondition::dollar_count);
        CHECK(u("$@0 $@0").failed_condition == UCondition::dollar_count);
        CHECK(u("]@1 $@0 [@1").failed_condition == UCondition::bracket_wellformedness);
        CHECK(u("[@1 $@0").failed_condition == UCondition::bracket_wellformedness);
        CHECK(u("[@1 ]@1 $@0").member);
        CHECK(u("[@1 [@2 $@0 ]@2 ]@1").member);
        CHECK(u("[@1 [@2 $@0 ]@1 ]@2").failed_condition == UCondition::suffix_symmetry);
        // The mirrored prefix ends at the last unmatched opening bracket.
        CHECK(u("[@1 ]@2 [@3 $@0 ]@3 [@2 ]@1").member);
        CHECK_FALSE(u("[@1 ]@2 $@0 [@2 ]@1").member);
        CHECK_THROWS_AS(u("a@1"), std::invalid_argument);
    }

    TEST_CASE("recognizer agrees with the examples")
    {
        const Automaton aut = build_u_recognizer();
        CHECK(aut.collapsible());
        CHECK(aut.level() == 2);
        CHECK(recognized(aut, "[@1 $@0 ]@1"));
        CHECK(recognized(aut, "$@5"));
        CHECK(recognized(aut, "[@1 ]@2 [@3 $@0 ]@3 [@2 ]@1"));
        CHECK_FALSE(recognized(aut, "]@1 $@0"));
        CHECK_FALSE(recognized(aut, "]@1"));
        CHECK_FALSE(recognized(aut, "[@1 $@0 ]@2"));
        CHECK_FALSE(recognized(aut, "[@1 ]@1"));
    }

    TEST_CASE("after k letters the stack has k+2 1-stacks recording the input")
    {
        const Automaton aut = build_u_recognizer();
        const DataWord w = parse_data_word("[@1 [@2 ]@2 [@3 ]@3 ]@1 [@4");
        for (std::size_t k = 0; k <= w.size(); ++k) {
            const DataWord prefix(w.begin(), w.begin() + static_cast<long>(k));
            const Outcome o = execute_word(aut, to_input_word(aut, prefix));
            REQUIRE(o.consumed == k);
            const Stack& s = o.run.last().stack;
            CAPTURE(k);
            CHECK(s.size() == k + 2);
            for (std::size_t i = 1; i <= k; ++i) {
                const Atom& a = s[i].top().as_atom();
                CHECK(aut.stack_alphabet()[a.symbol] == prefix[i - 1].letter);
                CHECK(a.data == DataValue::of(prefix[i - 1].value));
            }
        }
    }

    TEST_CASE("witness words")
    {
        for (unsigned n = 1; n <= 3; ++n) CHECK(gen_w(0, n) == "[][");
        CHECK(gen_w(1, 2) == "[][[][]][");
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned k = 0; k <= 4; ++k) {
                CHECK(gen_w(k + 1, n).size() == n * gen_w(k, n).size() + n + 1);
                CHECK(gen_w_length(k, n) == gen_w(k, n).size());
            }
        CHECK_THROWS_AS(gen_w(7, 1), std::length_error);
        CHECK_THROWS_AS(gen_w(6, 3, 100), std::length_error);
    }

    TEST_CASE("distinct decoration")
    {
        CHECK(decorate_distinct("[]") == parse_data_word("[@1 ]@2"));
        CHECK(decorate_distinct("").empty());
        for (const auto& l : decorate_distinct(gen_w(2, 2))) CHECK(l.value != 0);
    }
}
