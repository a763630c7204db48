#include "test_util.hpp"

#include "hopad/decomposition.hpp"
#include "hopad/harness.hpp"
#include "hopad/lineage.hpp"

#include <doctest.h>

using namespace hopad;

namespace {

using Sets = std::vector<std::size_t>;

Run one_step_run(const char* trans, const char* start, int level, std::uint64_t value = 0)
{
    std::string text = "level " + std::to_string(level) +
                       "\ninput-alphabet a\nstack-alphabet X Y\ninitial-state p\ninitial-symbol X\naccepting q\n" +
                       trans + "\nstart-stack " + start + "\n";
    const Automaton aut = test_util::automaton(text);
    Outcome o = execute_word(aut, {InputLetter{0, value}}, default_eps_budget, start_configuration(aut));
    REQUIRE(o.accepted());
    return o.run;
}

} // namespace

TEST_SUITE("run-analysis")
{
    TEST_CASE("lineage of the classification example")
    {
        const LineageRun lr(table1_run());
        // The topmost 1-stack [cd] at j=0 is the same object at j=3.
        CHECK(lr.top_id(0, 1) == lr.top_id(3, 1));
        // push^2 creates a fresh 1-stack copied from [cd] with fresh atoms.
        const LineageId copy = lr.top_id(1, 1);
        CHECK(copy != lr.top_id(0, 1));
        CHECK(lr.copy_of(copy) == lr.top_id(0, 1));
        CHECK(lr.birth(copy) == 1);
        CHECK(lr.copy_of(lr.top_id(1, 0)) == lr.top_id(0, 0));
        CHECK_FALSE(lr.copy_of(lr.top_id(0, 1)).has_value());
        // pop^2 at j=2 -> 3 destroys the copy.
        CHECK(lr.death(copy) == 3);
        CHECK(lr.alive(copy, 2));
        CHECK_FALSE(lr.alive(copy, 3));
        CHECK(lr.death(lr.top_id(0, 1)) == LineageRun::npos);
        CHECK(lr.top_size(1, 2) == 3);
        CHECK(lr.second_id(1, 2) == lr.top_id(0, 1));
        CHECK_FALSE(lr.second_id(6, 1).has_value());
    }

    TEST_CASE("upper runs and returns of the classification example")
    {
        const LineageRun lr(table1_run());
        CHECK(is_k_upper(lr, 0, 3, 0));
        CHECK_FALSE(is_k_upper(lr, 2, 3, 0));
        CHECK(is_k_return(lr, 1, 3, 2));
        CHECK(is_k_return(lr, 2, 3, 2));
        CHECK(is_k_return(lr, 5, 6, 1));
        CHECK(is_k_return(lr, 1, 2, 1));
        CHECK_FALSE(is_k_return(lr, 0, 6, 1));
        for (std::size_t i = 0; i <= 6; ++i)
            for (std::size_t j = i; j <= 6; ++j) {
                CHECK(is_k_upper(lr, i, j, 2));
                for (int k = 1; k <= 2; ++k) CHECK(is_k_return(lr, i, j, k) == is_k_return_remark(lr, i, j, k));
            }
        CHECK_THROWS_AS(is_k_upper(lr, 0, 7, 0), std::out_of_range);
        CHECK_THROWS_AS(is_k_return(lr, 0, 1, 0), std::out_of_range);
    }

    TEST_CASE("classification table equals the published grid")
    {
        const LineageRun lr(table1_run());
        const ClassificationTable t = classification_table(lr);
        const std::vector<std::vector<Sets>> expected{
            // 0-upper, 1-upper, 1-return, 2-return
            {{0}, {0}, {}, {}},
            {{0, 1}, {0, 1}, {}, {}},
            {{2}, {0, 1, 2}, {0, 1}, {}},
            {{0, 3}, {0, 3}, {}, {1, 2}},
            {{4}, {0, 3, 4}, {0, 3}, {}},
            {{4, 5}, {0, 3, 4, 5}, {}, {}},
            {{4, 6}, {0, 3, 4, 5, 6}, {5}, {}},
        };
        REQUIRE(t.upper.size() == 7);
        for (std::size_t j = 0; j < 7; ++j) {
            CAPTURE(j);
            CHECK(t.upper[j][0] == expected[j][0]);
            CHECK(t.upper[j][1] == expected[j][1]);
            CHECK(t.returns[j][1] == expected[j][2]);
            CHECK(t.returns[j][2] == expected[j][3]);
            for (int k = 0; k <= 2; ++k) {
                const auto& up = t.upper[j][static_cast<std::size_t>(k)];
                CHECK(std::find(up.begin(), up.end(), j) != up.end());
            }
            for (int k = 1; k <= 2; ++k) {
                const auto& ret = t.returns[j][static_cast<std::size_t>(k)];
                CHECK(std::find(ret.begin(), ret.end(), j) == ret.end());
            }
        }
        const std::vector<std::string> rows = render_classification(lr, {"a", "b", "c", "d", "e"});
        CHECK(rows == expected_table1());
    }

    TEST_CASE("elementary runs")
    {
        const Run push = one_step_run("trans p X in a q push 1 Y", "[[(X,-)]]", 2);
        const LineageRun lpush(push);
        CHECK(is_k_upper(lpush, 0));
        CHECK(is_k_upper(lpush, 2));
        CHECK_FALSE(is_k_return(lpush, 1));

        const Run pop = one_step_run("trans p Y in a q pop 1", "[[(X,-) (Y,4)]]", 2, 4);
        const LineageRun lpop(pop);
        CHECK(is_k_return(lpop, 1));
        CHECK_FALSE(is_k_return(lpop, 2));
        CHECK(is_k_upper(lpop, 1));
        CHECK_FALSE(is_k_upper(lpop, 0));

        const Run pop2 = one_step_run("trans p Y in a q pop 2", "[[(X,-)] [(Y,4)]]", 2, 4);
        CHECK(is_k_return(LineageRun(pop2), 2));
        CHECK_FALSE(is_k_upper(LineageRun(pop2), 1));
    }

    TEST_CASE("a return is only exposed by its last step")
    {
        // pop^1 exposes the second atom, push^1 covers it again, pop^1 exposes it: R[0..3] is
        // not a 1-return, R[2..3] is.
        const Automaton aut = test_util::automaton(
            "level 1\ninput-alphabet a\nstack-alphabet X Y\ninitial-state p\ninitial-symbol X\naccepting\n"
            "trans p Y eps q pop 1\ntrans q X eps r push 1 Y\ntrans r Y eps s pop 1\nstart-stack [(X,-) (Y,-)]\n");
        const Outcome o = execute_word(aut, {}, default_eps_budget, start_configuration(aut));
        REQUIRE(o.run.length() == 3);
        const LineageRun lr(o.run);
        CHECK(is_k_return(lr, 0, 1, 1));
        CHECK_FALSE(is_k_return(lr, 0, 3, 1));
        CHECK(is_k_return(lr, 2, 3, 1));
        CHECK_FALSE(is_k_return(lr, 1, 3, 1));
        Decomposer dec(o.run);
        for (std::size_t i = 0; i <= 3; ++i)
            for (std::size_t j = i; j <= 3; ++j) {
                CHECK(dec.is_return(i, j, 1) == is_k_return(lr, i, j, 1));
                CHECK(dec.is_upper(i, j, 0) == is_k_upper(lr, i, j, 0));
            }
    }

    TEST_CASE("return decompositions")
    {
        const Run r = table1_run();
        auto single = decompose_return(r.subrun(2, 3), 2);
        REQUIRE(single);
        CHECK(single->kind == NodeKind::return_pop);

        Decomposer dec(r);
        auto two = dec.decompose_return(1, 3, 2);
        REQUIRE(two);
        CHECK(two->kind == NodeKind::return_prefix);
        REQUIRE(two->children.size() == 1);
        CHECK(two->children[0].kind == NodeKind::return_pop);
        CHECK(two->children[0].from == 2);

        CHECK_FALSE(dec.decompose_return(0, 6, 1));
        CHECK_FALSE(dec.decompose_return(3, 3, 1));
        auto r56 = dec.decompose_return(5, 6, 1);
        REQUIRE(r56);
        CHECK(r56->kind == NodeKind::return_pop);
        CHECK_FALSE(render_tree(*two).empty());
    }

    TEST_CASE("upper decompositions")
    {
        const Run r = table1_run();
        Decomposer dec(r);
        auto low = dec.decompose_upper(3, 6, 1);
        REQUIRE(low);
        CHECK(low->kind == NodeKind::upper_low);
        auto push = dec.decompose_upper(0, 1, 1);
        REQUIRE(push);
        CHECK(push->kind == NodeKind::upper_push);
        auto pr = dec.decompose_upper(0, 3, 1);
        REQUIRE(pr);
        CHECK(pr->kind == NodeKind::upper_push_return);
        REQUIRE(pr->children.size() == 1);
        CHECK(pr->children[0].from == 1);
        auto comp = dec.decompose_upper(0, 6, 0);
        CHECK_FALSE(comp);
        auto comp2 = dec.decompose_upper(4, 6, 0);
        REQUIRE(comp2);
        CHECK_FALSE(dec.decompose_upper(2, 3, 0));
    }

    TEST_CASE("decompositions agree with lineage on every subrun of the example")
    {
        const Run r = table1_run();
        const LineageRun lr(r);
        Decomposer dec(r);
        for (std::size_t i = 0; i <= r.length(); ++i)
            for (std::size_t j = i; j <= r.length(); ++j)
                for (int k = 0; k <= 2; ++k) {
                    CHECK(dec.is_upper(i, j, k) == is_k_upper(lr, i, j, k));
                    if (k >= 1) CHECK(dec.is_return(i, j, k) == is_k_return(lr, i, j, k));
                }
    }

    TEST_CASE("step effects")
    {
        std::vector<EffectKind> kinds;
        for (const Effect& e : step_effects(table1_run())) kinds.push_back(e.kind);
        CHECK(kinds == std::vector<EffectKind>{EffectKind::push, EffectKind::pop, EffectKind::pop, EffectKind::pop,
                                               EffectKind::push, EffectKind::pop});
        CHECK_FALSE(has_multi_pop(table1_run()));

        const Automaton aut = test_util::automaton(
            "level 2\ncollapsible true\ninput-alphabet a\nstack-alphabet X Y W\ninitial-state p\n"
            "initial-symbol X\naccepting\ntrans p X eps q push 2 X\ntrans q X eps r push 1 Y\n"
            "trans r Y eps s push 2 W\ntrans s W eps t pop 1\ntrans t X eps u collapse 2\n");
        const Run r = execute_word(aut, {}).run;
        REQUIRE(r.length() == 5);
        const std::vector<Effect> effects = step_effects(r);
        CHECK(effects[4].kind == EffectKind::multi_pop);
        CHECK(effects[4].level == 2);
        CHECK(has_multi_pop(r));
        CHECK(r.last().stack == r.first().stack);
    }
}
