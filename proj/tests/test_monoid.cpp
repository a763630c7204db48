#include "test_util.hpp"

#include "hopad/monoid.hpp"
#include "hopad/run.hpp"

#include <doctest.h>

using namespace hopad;

namespace {

enum : MonoidElement { ID = 0, CLOSE = 1, DOLLAR = 2, OTHER = 3 };

std::vector<std::string> all_words(std::size_t max_len)
{
    std::vector<std::string> words{""};
    for (std::size_t i = 0; i < words.size(); ++i)
        if (words[i].size() < max_len)
            for (const char* c : {"[", "]", "$"}) words.push_back(words[i] + c);
    return words;
}

} // namespace

TEST_SUITE("monoid")
{
    TEST_CASE("shape and trivial monoids satisfy the laws")
    {
        CHECK(validate_monoid(shape_monoid()).empty());
        const FiniteMonoid t = trivial_monoid({"a", "b"});
        CHECK(t.size() == 1);
        CHECK(validate_monoid(t).empty());
    }

    TEST_CASE("a non-associative table is reported with its triple")
    {
        // e, a, b with a*a = b, a*b = a, b*a = b, b*b = a.
        const FiniteMonoid m({"e", "a", "b"}, 0, {{0, 1, 2}, {1, 2, 1}, {2, 2, 1}}, {"x"}, {1});
        const auto v = validate_monoid(m);
        REQUIRE_FALSE(v.empty());
        bool found = false;
        for (const auto& x : v)
            if (x.law == "associativity" && x.detail.find("(a,a,b)") != std::string::npos) found = true;
        CHECK(found);
    }

    TEST_CASE("closure, identity and letter map violations")
    {
        const FiniteMonoid bad_closure({"e", "a"}, 0, {{0, 1}, {1, 5}}, {"x"}, {1});
        CHECK_FALSE(validate_monoid(bad_closure).empty());
        const FiniteMonoid bad_identity({"e", "a"}, 0, {{0, 0}, {1, 1}}, {"x"}, {1});
        bool left = false;
        for (const auto& x : validate_monoid(bad_identity)) left |= x.law == "left-identity";
        CHECK(left);
        const FiniteMonoid bad_letter({"e"}, 0, {{0}}, {"x"}, {3});
        bool letter = false;
        for (const auto& x : validate_monoid(bad_letter)) letter |= x.law == "letter-map";
        CHECK(letter);
    }

    TEST_CASE("shape classification")
    {
        const FiniteMonoid m = shape_monoid();
        CHECK(classify_string(m, "]") == CLOSE);
        CHECK(classify_string(m, "") == ID);
        CHECK(classify_string(m, "]]") == OTHER);
        CHECK(classify_string(m, "$][") == DOLLAR);
        CHECK(classify_string(m, "[") == OTHER);
        CHECK(classify_string(m, "]$") == OTHER);
        CHECK(classify_word(m, {"$", "]"}) == DOLLAR);
        CHECK(m.name(CLOSE) == "CLOSE");
        CHECK(m.element("OTHER") == OTHER);
        CHECK_THROWS_AS(m.letter_image("a"), std::invalid_argument);
        CHECK_THROWS_AS(monoid_by_name("free", {"a"}), std::invalid_argument);
    }

    TEST_CASE("classification is a homomorphism on words of length at most 4")
    {
        const FiniteMonoid m = shape_monoid();
        for (const auto& w : all_words(4))
            for (std::size_t cut = 0; cut <= w.size(); ++cut) {
                CAPTURE(w);
                CHECK(classify_string(m, w) ==
                      m.multiply(classify_string(m, w.substr(0, cut)), classify_string(m, w.substr(cut))));
            }
    }

    TEST_CASE("phi of runs")
    {
        const Automaton reader = test_util::automaton(
            "level 1\ninput-alphabet [ ] $\nstack-alphabet X\ninitial-state p\ninitial-symbol X\naccepting p\n"
            "trans p X in ] p push 1 X\ntrans p X in $ p push 1 X\n");
        FiniteMonoid m = shape_monoid();
        m.bind(reader.input_alphabet());
        CHECK(phi_of_run(m, execute_word(reader, {}).run) == ID);
        CHECK(phi_of_run(m, execute_word(reader, {InputLetter{1, 7}}).run) == CLOSE);
        CHECK(phi_of_run(m, execute_word(reader, {InputLetter{2, 0}, InputLetter{1, 1}}).run) == DOLLAR);

        const Automaton eps = test_util::automaton("level 1\ninput-alphabet ]\nstack-alphabet X\ninitial-state p\n"
                                                   "initial-symbol X\naccepting q\ntrans p X eps q push 1 X\n");
        FiniteMonoid m2 = shape_monoid();
        m2.bind(eps.input_alphabet());
        const Run r = execute_word(eps, {}).run;
        CHECK(r.length() == 1);
        CHECK(phi_of_run(m2, r) == ID);

        FiniteMonoid unbound = shape_monoid();
        CHECK_THROWS(phi_of_run(unbound, execute_word(reader, {InputLetter{1, 7}}).run));
        CHECK_THROWS_AS(shape_monoid().bind({"a"}), std::invalid_argument);
    }
}
