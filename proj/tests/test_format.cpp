#include "test_util.hpp"

#include "hopad/harness.hpp"
#include "hopad/text_format.hpp"
#include "hopad/u_language.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hopad;

namespace {

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

AutomatonDescription parse_ok(const std::string& text)
{
    auto r = parse_automaton(text);
    REQUIRE(std::holds_alternative<AutomatonDescription>(r));
    return std::get<AutomatonDescription>(r);
}

std::vector<Diagnostic> parse_bad(const std::string& text)
{
    auto r = parse_automaton(text);
    REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
    return std::get<std::vector<Diagnostic>>(r);
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("data words")
    {
        CHECK(project_word(parse_data_word("[@1 ]@1")) == "[]");
        CHECK(project_word(parse_data_word("")) == "");
        CHECK(project_word(parse_data_word("$@0 [@3")) == "$[");
        const DataWord w = parse_data_word("  [@12\t]@0  ");
        REQUIRE(w.size() == 2);
        CHECK(w[0] == DataLetter{"[", 12});
        CHECK(format_data_word(w) == "[@12 ]@0");
        CHECK(parse_data_word("a@b@3")[0].letter == "a@b");
        CHECK_THROWS_AS(parse_data_word("[@"), std::invalid_argument);
        CHECK_THROWS_AS(parse_data_word("[@x"), std::invalid_argument);
        CHECK_THROWS_AS(parse_data_word("["), std::invalid_argument);
        CHECK_THROWS_AS(parse_data_word("[@-1"), std::invalid_argument);
        const Automaton u = build_u_recognizer();
        CHECK_THROWS_AS(to_input_word(u, parse_data_word("x@1")), std::invalid_argument);
        CHECK(to_data_word(u, to_input_word(u, parse_data_word("[@1 $@2"))) == parse_data_word("[@1 $@2"));
    }

    TEST_CASE("stack rendering")
    {
        const std::vector<std::string> names{"X", "Y"};
        const std::string text = "[[(X,-;1,1) (Y,3;1,4)]]";
        const Stack s = parse_stack(text, 2, names);
        CHECK(render_stack(s, names) == text);
        CHECK(top_atom(s).links == std::vector<std::uint32_t>{1, 4});
        CHECK(render_stack(parse_stack("[(X,-) (Y,3)]", 1, names), names) == "[(X,-) (Y,3)]");
        CHECK_THROWS(parse_stack("[(Z,1)]", 1, names));
        CHECK_THROWS(parse_stack("[(X,1)", 1, names));
        CHECK_THROWS(parse_stack("[(X,1)]", 2, names));
        const std::vector<std::string> brackets{"[", "]"};
        const Stack b = parse_stack("[([,1) (],2)]", 1, brackets);
        CHECK(render_stack(b, brackets) == "[([,1) (],2)]");
    }

    TEST_CASE("automaton format round trip")
    {
        const AutomatonDescription u = u_recognizer_description();
        CHECK(parse_ok(print_automaton(u)) == u);
        CHECK(print_automaton(parse_ok(print_automaton(u))) == print_automaton(u));

        std::size_t files = 0;
        for (const auto& entry : std::filesystem::directory_iterator(HOPAD_DATA_DIR)) {
            if (entry.path().extension() != ".hopa") continue;
            ++files;
            CAPTURE(entry.path().string());
            const AutomatonDescription d = parse_ok(slurp(entry.path()));
            CHECK(parse_ok(print_automaton(d)) == d);
            CHECK(std::holds_alternative<Automaton>(validate_automaton(d)));
        }
        CHECK(files >= 3);
    }

    TEST_CASE("golden files")
    {
        const std::filesystem::path dir(HOPAD_DATA_DIR);
        CHECK(slurp(dir / "u_recognizer.hopa") == print_automaton(u_recognizer_description()));
        CHECK(slurp(dir / "table1.hopa") == table1_machine_text());
    }

    TEST_CASE("parse diagnostics carry line numbers")
    {
        auto diags = parse_bad("level 2\n\ninitial-symbol X\nbogus directive\n");
        REQUIRE(diags.size() == 1);
        CHECK(diags[0].line == 4);
        CHECK(to_string(diags[0]).find("line 4") != std::string::npos);

        diags = parse_bad("level 1\nlevel 2\ninitial-symbol X\n");
        CHECK(diags[0].line == 2);
        diags = parse_bad("initial-symbol X\n");
        CHECK(diags[0].message.find("level") != std::string::npos);
        diags = parse_bad("level 1\ninitial-symbol X\ntrans q X in a q jump 1\n");
        CHECK(diags[0].line == 3);
        diags = parse_bad("level 1\ninitial-symbol X\ntrans q X in a q push 1\n");
        CHECK(diags[0].line == 3);
        diags = parse_bad("level x\ninitial-symbol X\n");
        CHECK(diags[0].line == 1);
    }

    TEST_CASE("comments and inferred states")
    {
        const AutomatonDescription d = parse_ok("# header\nlevel 1   # trailing\ninput-alphabet a#b\n"
                                                "stack-alphabet X\ninitial-state p\ninitial-symbol X\n"
                                                "accepting\ntrans p X in a#b r push 1 X\n");
        CHECK(d.input_alphabet == std::vector<std::string>{"a#b"});
        const Automaton a = make_automaton(d);
        CHECK(a.states() == std::vector<std::string>{"p", "r"});
    }

    TEST_CASE("validation against the format")
    {
        auto r = validate_automaton(parse_ok("level 1\ninput-alphabet a\nstack-alphabet X\ninitial-state p\n"
                                             "initial-symbol X\naccepting\nstart-stack [(X,1) (Q,2)]\n"));
        REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
        CHECK(std::get<std::vector<Diagnostic>>(r)[0].rule == "start-stack");
        r = validate_automaton(parse_ok("level 1\ninput-alphabet a\nstack-alphabet X\ninitial-state p\n"
                                        "initial-symbol X\naccepting\nscenario-word b@1\n"));
        REQUIRE(std::holds_alternative<std::vector<Diagnostic>>(r));
        CHECK(std::get<std::vector<Diagnostic>>(r)[0].rule == "scenario-word");
        r = validate_automaton(parse_ok("level 1\ncollapsible true\ninput-alphabet a\nstack-alphabet X\n"
                                        "initial-state p\ninitial-symbol X\naccepting\nstart-stack [(X,1)]\n"));
        CHECK(std::holds_alternative<std::vector<Diagnostic>>(r));
    }
}
