// Command-line front end for the hopad library.

#include "hopad/harness.hpp"
#include "hopad/lineage.hpp"
#include "hopad/src_transfer.hpp"
#include "hopad/text_format.hpp"
#include "hopad/types.hpp"
#include "hopad/u_language.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace hopad;

constexpr int exit_input_error = 2;

/// Thrown for unreadable files, invalid automata and malformed words.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::variant<Automaton, std::vector<Diagnostic>> load(const std::string& path)
{
    auto parsed = parse_automaton(read_file(path));
    if (auto* d = std::get_if<std::vector<Diagnostic>>(&parsed)) return *d;
    return validate_automaton(std::get<AutomatonDescription>(parsed));
}

Automaton load_or_throw(const std::string& path)
{
    auto r = load(path);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&r)) {
        std::string msg = path + ": invalid automaton";
        for (const auto& d : *diags) msg += "\n" + path + ":" + to_string(d);
        throw InputError(msg);
    }
    return std::get<Automaton>(std::move(r));
}

InputWord word_for(const Automaton& aut, const std::string& word)
{
    std::string text = word;
    if (text.empty() && aut.description().scenario_word) text = *aut.description().scenario_word;
    try {
        return to_input_word(aut, parse_data_word(text));
    } catch (const std::exception& e) {
        throw InputError(std::string("bad word: ") + e.what());
    }
}

FiniteMonoid monoid_for(const Automaton& aut, const std::string& name)
{
    std::string chosen = name;
    if (chosen.empty()) {
        chosen = "shape";
        for (const auto& a : aut.input_alphabet())
            if (a != "[" && a != "]" && a != "$") chosen = "trivial";
    }
    try {
        FiniteMonoid m = monoid_by_name(chosen, aut.input_alphabet());
        m.bind(aut.input_alphabet());
        return m;
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
}

std::string op_token(const Operation& op, const std::vector<std::string>& symbols)
{
    switch (op.kind) {
    case OpKind::pop: return "pop" + std::to_string(op.level);
    case OpKind::push: return "push" + std::to_string(op.level) + "(" + symbols.at(op.symbol) + ")";
    case OpKind::collapse: return "collapse" + std::to_string(op.level);
    }
    return "?";
}

void dump_run(const Automaton& aut, const Run& run)
{
    const auto& symbols = aut.stack_alphabet();
    std::cout << "start state=" << aut.states().at(run.first().state) << " stack=" << render_stack(run.first().stack, symbols)
              << '\n';
    for (std::size_t i = 0; i < run.length(); ++i) {
        const Step& s = run.step_at(i);
        std::string read = "eps";
        if (!s.label.is_eps())
            read = aut.input_alphabet().at(*s.label.letter) + "@" + std::to_string(s.label.data.value());
        std::cout << "i=" << i << " state=" << aut.states().at(run.at(i + 1).state)
                  << " op=" << op_token(s.transition.op, symbols) << " read=" << read << '\n';
        std::cout << "    " << render_stack(run.at(i + 1).stack, symbols) << '\n';
    }
}

Outcome run_word(const Automaton& aut, const std::string& word, std::size_t budget)
{
    return execute_word(aut, word_for(aut, word), budget, start_configuration(aut));
}

void print_outcome(const Outcome& o)
{
    std::cout << to_string(o.verdict);
    if (!o.accepted()) std::cout << ": " << o.reason;
    std::cout << " (consumed " << o.consumed << " letters, " << o.run.length() << " steps)\n";
}

Run scenario_subrun(const Automaton& aut, const std::string& word, std::size_t budget, std::optional<std::size_t> from,
                    std::optional<std::size_t> to)
{
    const Outcome o = run_word(aut, word, budget);
    const std::size_t i = from.value_or(0);
    const std::size_t j = to.value_or(o.run.length());
    if (i > j || j > o.run.length())
        throw InputError("range [" + std::to_string(i) + ".." + std::to_string(j) + "] outside the run of length " +
                         std::to_string(o.run.length()));
    return o.run.subrun(i, j);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Higher-order pushdown automata with data: simulation, run classification and type checks"};
    app.require_subcommand(1);

    std::string file;
    std::string word;
    std::size_t eps_budget = default_eps_budget;
    bool dump = false;
    std::optional<std::size_t> from;
    std::optional<std::size_t> to;
    int k = 0;
    std::string monoid;
    std::size_t max_steps = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> suites;
    unsigned gen_k = 0;
    unsigned gen_n = 2;

    auto* validate = app.add_subcommand("validate", "Check an automaton file");
    validate->add_option("file", file, "Automaton file")->required();

    auto* run = app.add_subcommand("run", "Run a data word and print the verdict");
    run->add_option("file", file, "Automaton file")->required();
    run->add_option("--word", word, "Data word, e.g. \"[@1 $@0 ]@1\" (default: the scenario word)");
    run->add_option("--eps-budget", eps_budget, "Maximal number of consecutive epsilon steps");
    run->add_flag("--dump", dump, "Print every step with the resulting stack");

    auto* accept = app.add_subcommand("accept", "Exit 0 when the word is accepted, 1 otherwise");
    accept->add_option("file", file, "Automaton file")->required();
    accept->add_option("--word", word, "Data word");
    accept->add_option("--eps-budget", eps_budget, "Maximal number of consecutive epsilon steps");

    auto* classify = app.add_subcommand("classify", "Print the upper/return classification of the scenario run");
    classify->add_option("file", file, "Automaton file")->required();
    classify->add_option("--word", word, "Data word (default: the scenario word)");
    classify->add_option("--eps-budget", eps_budget, "Maximal number of consecutive epsilon steps");
    classify->add_option("--from", from, "First configuration index");
    classify->add_option("--to", to, "Last configuration index");

    auto* types = app.add_subcommand("types", "Saturate the type system and print descriptors");
    types->add_option("file", file, "Automaton file")->required();
    types->add_option("--monoid", monoid, "shape or trivial (default: shape over [ ] $, trivial otherwise)");
    types->add_option("--k", k, "Also type the spine of the start stack at this level");

    auto* src = app.add_subcommand("src", "Compute src sets for a k-upper subrun of the scenario run");
    src->add_option("file", file, "Automaton file")->required();
    src->add_option("--word", word, "Data word (default: the scenario word)");
    src->add_option("--eps-budget", eps_budget, "Maximal number of consecutive epsilon steps");
    src->add_option("--from", from, "First configuration index");
    src->add_option("--to", to, "Last configuration index");
    src->add_option("--k", k, "Level of the upper run")->required();
    src->add_option("--monoid", monoid, "shape or trivial");

    auto* ucheck = app.add_subcommand("u-check", "Decide membership in U; exit 0 for members");
    ucheck->add_option("--word", word, "Data word over [ ] $")->required();
    ucheck->add_option("--eps-budget", eps_budget, "Budget for the recognizer run");

    auto* umachine = app.add_subcommand("u-machine", "Print the U recognizer in the automaton format");

    auto* genword = app.add_subcommand("gen-word", "Print the witness word w_k");
    genword->add_option("--k", gen_k, "Index k (at most 6)")->required();
    genword->add_option("--n", gen_n, "Repetition count N");

    auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff no hard failure");
    verify->add_option("--suite", suites, "Suite name (repeatable; default all)");
    verify->add_option("--seed", seed, "Seed for random machines and words");
    verify->add_option("--max-steps", max_steps, "Override the run length bound of the lemma suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input_error;
    }

    try {
        if (*validate) {
            auto r = load(file);
            if (auto* diags = std::get_if<std::vector<Diagnostic>>(&r)) {
                for (const auto& d : *diags) std::cerr << file << ":" << to_string(d) << '\n';
                return exit_input_error;
            }
            const Automaton& aut = std::get<Automaton>(r);
            std::cout << "ok: level " << aut.level() << (aut.collapsible() ? " collapsible" : "") << ", "
                      << aut.state_count() << " states, " << aut.transitions().size() << " transitions\n";
            return 0;
        }
        if (*run || *accept) {
            const Automaton aut = load_or_throw(file);
            const Outcome o = run_word(aut, word, eps_budget);
            if (dump) dump_run(aut, o.run);
            print_outcome(o);
            return o.accepted() ? 0 : 1;
        }
        if (*classify) {
            const Automaton aut = load_or_throw(file);
            const LineageRun lr(scenario_subrun(aut, word, eps_budget, from, to));
            std::cout << classification_header(aut.level()) << '\n';
            for (const auto& row : render_classification(lr, aut.stack_alphabet())) std::cout << row << '\n';
            return 0;
        }
        if (*types) {
            const Automaton aut = load_or_throw(file);
            const TypeSystem ts = TypeSystem::saturate(aut, monoid_for(aut, monoid));
            const RenderNames names = ts.names();
            for (SymbolId x = 0; x < aut.symbol_count(); ++x)
                for (bool hd : {false, true})
                    for (const auto& [id, idv] : ts.entry(x, hd))
                        std::cout << "entry " << aut.stack_alphabet()[x] << (hd ? " data" : " nodata") << (idv ? " idv" : "")
                                  << " #" << id << " " << ts.store().render(id, names) << '\n';
            if (types->count("--k")) {
                if (k < 0 || k > aut.level()) throw InputError("--k out of range");
                const Stack start = start_configuration(aut).stack;
                const SpineTyping sp = ts.type_of_spine(start, k);
                for (int l = aut.level(); l >= k; --l)
                    for (const auto& [id, idv] : sp[l].idv) {
                        std::cout << "piece " << l << " #" << id << " idv={";
                        for (std::size_t i = 0; i < idv.size(); ++i) std::cout << (i ? "," : "") << idv[i];
                        std::cout << "}\n";
                    }
            }
            std::cout << "descriptors " << ts.stats().interned << '\n';
            return 0;
        }
        if (*src) {
            const Automaton aut = load_or_throw(file);
            if (k < 0 || k > aut.level()) throw InputError("--k out of range");
            const TypeSystem ts = TypeSystem::saturate(aut, monoid_for(aut, monoid));
            const LineageRun lr(scenario_subrun(aut, word, eps_budget, from, to));
            if (!is_k_upper(lr, k)) {
                std::cout << "the run is not " << k << "-upper\n";
                return 1;
            }
            const SpineTyping final_sp = ts.type_of_spine(lr.run().last().stack, k);
            std::vector<IdSet> sigma(static_cast<std::size_t>(aut.level() + 1));
            for (int l = k + 1; l <= aut.level(); ++l) sigma[static_cast<std::size_t>(l)] = final_sp[l].types();
            std::cout << render_src(compute_src(ts, lr, k, sigma), ts);
            return 0;
        }
        if (*ucheck) {
            DataWord w;
            try {
                w = parse_data_word(word);
                (void)in_u(w);
            } catch (const std::exception& e) {
                throw InputError(std::string("bad word: ") + e.what());
            }
            const UMembershipReport rep = in_u(w);
            const Automaton aut = build_u_recognizer();
            const Outcome o = execute_word(aut, to_input_word(aut, w), eps_budget);
            std::cout << (rep.member ? "member" : std::string("non-member: ") + to_string(rep.failed_condition))
                      << " (recognizer: " << to_string(o.verdict) << ")\n";
            return rep.member ? 0 : 1;
        }
        if (*umachine) {
            std::cout << print_automaton(u_recognizer_description());
            return 0;
        }
        if (*genword) {
            std::cout << gen_w(gen_k, gen_n) << '\n';
            return 0;
        }
        if (*verify) {
            SuiteOptions opts;
            opts.seed = seed;
            if (max_steps) opts.lemma_bound = opts.transfer_bound = max_steps;
            for (const auto& s : suites)
                if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
                    throw InputError("unknown suite '" + s + "'");
            const SuiteReport rep = run_suites(suites, opts);
            std::cout << render_report(rep);
            return rep.hard_failure() ? 1 : 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return 0;
}
