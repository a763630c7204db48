#include "test_util.hpp"

#include "hopad/automaton.hpp"
#include "hopad/run.hpp"
#include "hopad/stack.hpp"
#include "hopad/text_format.hpp"
#include "hopad/u_language.hpp"

#include <doctest.h>

using namespace hopad;

namespace {

const std::vector<std::string> abcde{"a", "b", "c", "d", "e"};

Stack table1_start() { return parse_stack("[[(a,-) (b,-)] [(c,-) (d,-)]]", 2, abcde); }

Stack apply(const Stack& s, const Operation& op, DataValue d = {})
{
    OpResult r = apply_operation(s, op, d);
    REQUIRE(r);
    return *r.stack;
}

bool has_rule(const std::vector<Diagnostic>& diags, const std::string& needle)
{
    for (const auto& d : diags)
        if (d.message.find(needle) != std::string::npos) return true;
    return false;
}

AutomatonDescription two_state_description()
{
    AutomatonDescription d;
    d.level = 1;
    d.input_alphabet = {"a"};
    d.stack_alphabet = {"X"};
    d.initial_state = "q";
    d.initial_symbol = "X";
    d.accepting = {"q"};
    return d;
}

} // namespace

TEST_SUITE("automaton-core")
{
    TEST_CASE("data values: NoData differs from every natural, 0 is a value")
    {
        for (std::uint64_t v : {0ull, 1ull, 5ull, 1ull << 40}) CHECK(DataValue::none() != DataValue::of(v));
        CHECK(DataValue::of(0).has_value());
        CHECK(DataValue::of(0).value() == 0);
        CHECK_THROWS_AS(DataValue::none().value(), std::logic_error);
    }

    TEST_CASE("operations of the classification example")
    {
        Stack s = apply(table1_start(), Operation::push(2, 4));
        CHECK(render_stack_compact(s, abcde) == "[ab][cd][ce]");
        s = apply(s, Operation::pop(1));
        CHECK(render_stack_compact(s, abcde) == "[ab][cd][c]");
        s = apply(s, Operation::pop(2));
        CHECK(render_stack_compact(s, abcde) == "[ab][cd]");
        CHECK(s == table1_start());
    }

    TEST_CASE("push stores its data value in the new top atom")
    {
        const Stack s = apply(table1_start(), Operation::push(1, 4), DataValue::of(9));
        CHECK(top_atom(s).symbol == 4);
        CHECK(top_atom(s).data == DataValue::of(9));
        CHECK(topmost(s, 1).size() == 3);
    }

    TEST_CASE("pop that would empty a stack is ill formed")
    {
        const Stack s = initial_stack(2, 0, false);
        CHECK(apply_operation(s, Operation::pop(2), {}).error == OpError::ill_formed);
        CHECK(apply_operation(s, Operation::pop(1), {}).error == OpError::ill_formed);
        CHECK(apply_operation(s, Operation::push(3, 0), {}).error == OpError::ill_formed);
    }

    TEST_CASE("initial stacks")
    {
        const std::vector<std::string> names{"X"};
        CHECK(render_stack(initial_stack(1, 0, false), names) == "[(X,-)]");
        CHECK(render_stack(initial_stack(2, 0, false), names) == "[[(X,-)]]");
        const Stack c = initial_stack(2, 0, true);
        CHECK(top_atom(c).links == std::vector<std::uint32_t>{1, 1});
        CHECK(apply_operation(c, Operation::collapse(2), {}).error == OpError::ill_formed);
        CHECK(apply_operation(c, Operation::collapse(1), {}).error == OpError::ill_formed);
        CHECK(apply_operation(initial_stack(2, 0, false), Operation::collapse(2), {}).error ==
              OpError::collapse_unavailable);
    }

    TEST_CASE("collapse truncates the topmost i-stack to link - 1 elements")
    {
        const std::vector<std::string> names{"X"};
        std::vector<Stack> ones;
        for (int i = 0; i < 5; ++i) ones.push_back(Stack::of(1, {Stack::atom(Atom{0, {}, {1, 1}})}));
        ones.back() = Stack::of(1, {Stack::atom(Atom{0, {}, {1, 1}}), Stack::atom(Atom{0, {}, {1, 2}})});
        const Stack s = Stack::of(2, ones);
        REQUIRE(s.size() == 5);
        const Stack r = apply(s, Operation::collapse(2));
        CHECK(r.size() == 1);
        CHECK(r[0] == s[0]);
    }

    TEST_CASE("push records the sizes of the topmost stacks after the operation")
    {
        const Stack s0 = initial_stack(2, 0, true);
        const Stack s1 = apply(s0, Operation::push(2, 0));
        CHECK(top_atom(s1).links == std::vector<std::uint32_t>{1, 2});
        const Stack s2 = apply(s1, Operation::push(1, 0));
        CHECK(top_atom(s2).links == std::vector<std::uint32_t>{2, 2});
        // collapse^2 from the atom pushed by push^2 removes the copy again.
        const Stack s3 = apply(s1, Operation::collapse(2));
        CHECK(s3 == s0);
    }

    TEST_CASE("well formedness and sizes")
    {
        CHECK(well_formed(table1_start()));
        CHECK_FALSE(well_formed(Stack::of(2, {Stack::empty(1)})));
        CHECK_FALSE(well_formed(Stack::empty(1)));
        CHECK(table1_start().size() == 2);
        CHECK(topmost(table1_start(), 1).size() == 2);
    }

    TEST_CASE("spines")
    {
        const Stack s = table1_start();
        const Spine sp1 = spine(s, 1);
        CHECK(sp1.n() == 2);
        CHECK(render_stack_compact(sp1[2], abcde) == "[ab]");
        CHECK(render_stack_compact(sp1[1], abcde) == "cd");
        const Spine sp0 = spine(s, 0);
        CHECK(render_stack_compact(sp0[2], abcde) == "[ab]");
        CHECK(render_stack_compact(sp0[1], abcde) == "c");
        CHECK(sp0[0].as_atom().symbol == 3);
        CHECK(compose(sp0) == s);
        CHECK(compose(sp1) == s);
        CHECK(compose_from(sp0, 1) == topmost(s, 1));

        const Spine single = spine(initial_stack(2, 0, false), 1);
        CHECK(single[2].empty());
        CHECK(single[1].size() == 1);
    }

    TEST_CASE("validation diagnostics")
    {
        AutomatonDescription d = two_state_description();
        d.transitions.push_back({"q", "X", std::string("a"), "q", OpKind::push, 1, "X", 3});
        d.transitions.push_back({"q", "X", std::nullopt, "q", OpKind::push, 1, "X", 4});
        auto r = validate_automaton(d);
        REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
        CHECK(has_rule(std::get<std::vector<Diagnostic>>(r), "epsilon-conflict at (q,X)"));

        d = two_state_description();
        d.transitions.push_back({"q", "X", std::string("a"), "q", OpKind::push, 1, "X", 3});
        d.transitions.push_back({"q", "X", std::string("a"), "q", OpKind::pop, 1, "", 4});
        r = validate_automaton(d);
        REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
        CHECK(has_rule(std::get<std::vector<Diagnostic>>(r), "determinism conflict"));

        d = two_state_description();
        d.transitions.push_back({"q", "X", std::string("a"), "q", OpKind::collapse, 1, "", 3});
        d.transitions.push_back({"q", "Z", std::string("b"), "q", OpKind::pop, 2, "", 4});
        r = validate_automaton(d);
        REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
        CHECK(std::get<std::vector<Diagnostic>>(r).size() >= 3);

        CHECK(std::holds_alternative<Automaton>(validate_automaton(u_recognizer_description())));
        CHECK(std::holds_alternative<Automaton>(validate_automaton(two_state_description())));
    }

    TEST_CASE("initial configuration")
    {
        AutomatonDescription d = two_state_description();
        const Automaton a1 = make_automaton(d);
        CHECK(initial_configuration(a1).stack == initial_stack(1, 0, false));
        d.level = 2;
        const Automaton a2 = make_automaton(d);
        CHECK(initial_configuration(a2).state == a2.initial_state());
        CHECK(initial_configuration(a2).stack == initial_stack(2, 0, false));
        CHECK_THROWS_AS(make_configuration(a2, 0, initial_stack(1, 0, false)), std::invalid_argument);
    }

    TEST_CASE("step on the single-pop machine")
    {
        const Automaton aut = test_util::automaton(test_util::single_pop_text);
        const Configuration c = start_configuration(aut);
        const StepResult ok = step(aut, c, InputLetter{0, 5});
        REQUIRE(ok.ok());
        CHECK(ok.next->state == *aut.state_id("q'"));
        CHECK(render_stack(ok.next->stack, aut.stack_alphabet()) == "[(G0,-)]");
        CHECK(ok.label == StepLabel{0, DataValue::of(5)});

        const StepResult bad = step(aut, c, InputLetter{0, 7});
        CHECK_FALSE(bad.ok());
        CHECK(bad.reason == StuckReason::data_mismatch);
        CHECK(step(aut, c, std::nullopt).reason == StuckReason::no_input);
        CHECK(step(aut, *ok.next, InputLetter{0, 5}).reason == StuckReason::no_transition);
    }

    TEST_CASE("epsilon transitions take priority and leave the input")
    {
        const Automaton aut = test_util::automaton("level 1\ninput-alphabet a\nstack-alphabet X\ninitial-state p\n"
                                                   "initial-symbol X\naccepting r\ntrans p X eps r push 1 X\n");
        const StepResult r = step(aut, initial_configuration(aut), InputLetter{0, 3});
        REQUIRE(r.ok());
        CHECK(r.label.is_eps());
        CHECK(r.label.data == DataValue::none());
        CHECK(top_atom(r.next->stack).data == DataValue::none());
        const Outcome o = execute_word(aut, {InputLetter{0, 3}});
        CHECK(o.verdict == Verdict::rejected);
        CHECK(o.consumed == 0);
    }

    TEST_CASE("execute_word on the U recognizer")
    {
        const Automaton u = build_u_recognizer();
        CHECK(execute_word(u, to_input_word(u, parse_data_word("$@5"))).accepted());
        CHECK(execute_word(u, to_input_word(u, parse_data_word("[@1 $@0 ]@1"))).accepted());
        CHECK(execute_word(u, to_input_word(u, parse_data_word("[@1 $@0 ]@2"))).verdict == Verdict::rejected);
        CHECK(execute_word(u, {}, 0).verdict == Verdict::budget_exhausted);
    }

    TEST_CASE("epsilon loops exhaust the budget")
    {
        const Automaton aut = test_util::automaton("level 1\ninput-alphabet a\nstack-alphabet X\ninitial-state p\n"
                                                   "initial-symbol X\naccepting\ntrans p X eps p push 1 X\n");
        const Outcome o = execute_word(aut, {}, 50);
        CHECK(o.verdict == Verdict::budget_exhausted);
        CHECK(o.run.length() == 50);
    }

    TEST_CASE("runs: subruns, composition, read word")
    {
        const Automaton u = build_u_recognizer();
        const Run r = execute_word(u, to_input_word(u, parse_data_word("[@1 $@0 ]@1"))).run;
        CHECK(r.subrun(0, r.length()) == r);
        CHECK(r.subrun(2, 2).length() == 0);
        CHECK(r.subrun(0, 3).then(r.subrun(3, r.length())) == r);
        CHECK(r.read_word().size() == 3);
        CHECK_THROWS(r.subrun(3, 2));
        for (std::size_t i = 0; i < r.length(); ++i) {
            const StepResult s = fire(r.at(i), r.step_at(i).transition, r.step_at(i).label);
            REQUIRE(s.ok());
            CHECK(*s.next == r.at(i + 1));
        }
    }

    TEST_CASE("normalized runs")
    {
        const Automaton aut = test_util::automaton("level 1\ninput-alphabet a b\nstack-alphabet X\ninitial-state p\n"
                                                   "initial-symbol X\naccepting p\ntrans p X in a p push 1 X\n");
        CHECK(is_normalized(execute_word(aut, {InputLetter{0, 0}, InputLetter{0, 0}}).run));
        CHECK_FALSE(is_normalized(execute_word(aut, {InputLetter{0, 0}, InputLetter{0, 7}}).run));
        const Automaton eps = test_util::automaton("level 1\ninput-alphabet a\nstack-alphabet X\ninitial-state p\n"
                                                   "initial-symbol X\naccepting q\ntrans p X eps q push 1 X\n");
        CHECK(is_normalized(execute_word(eps, {}).run));
        const Automaton pop = test_util::automaton(test_util::single_pop_text);
        CHECK(is_normalized(execute_word(pop, {InputLetter{0, 5}}, default_eps_budget, start_configuration(pop)).run));
    }
}
