#include "hopad/harness.hpp"

#include "hopad/decomposition.hpp"
#include "hopad/enumerate.hpp"
#include "hopad/src_transfer.hpp"
#include "hopad/text_format.hpp"
#include "hopad/types.hpp"
#include "hopad/u_language.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hopad {

namespace {

Automaton automaton_from_text(const std::string& text)
{
    auto parsed = parse_automaton(text);
    if (auto* diags = std::get_if<std::vector<Diagnostic>>(&parsed)) {
        std::string msg = "corpus automaton does not parse:";
        for (const auto& d : *diags) msg += "\n  " + to_string(d);
        throw std::logic_error(msg);
    }
    return make_automaton(std::get<AutomatonDescription>(parsed));
}

FiniteMonoid bound_monoid(FiniteMonoid m, const Automaton& aut)
{
    m.bind(aut.input_alphabet());
    return m;
}

std::uint64_t fresh_value(const Stack& s)
{
    std::uint64_t v = 0;
    for (auto x : data_values(s)) v = std::max(v, x);
    return v + 1;
}

std::vector<std::uint64_t> nonzero_values(const Stack& s)
{
    std::vector<std::uint64_t> out;
    for (auto v : data_values(s))
        if (v != 0) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string render_set(const std::vector<std::size_t>& s)
{
    if (s.empty()) return "∅";
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

} // namespace

// ---------------------------------------------------------------------------
// Corpus

CorpusMachine single_pop_machine()
{
    const std::string text = "level 1\n"
                             "collapsible false\n"
                             "input-alphabet a\n"
                             "stack-alphabet G0 G\n"
                             "states q q'\n"
                             "initial-state q\n"
                             "initial-symbol G0\n"
                             "accepting q'\n"
                             "trans q G in a q' pop 1\n"
                             "start-stack [(G0,-) (G,5)]\n";
    Automaton aut = automaton_from_text(text);
    FiniteMonoid m = bound_monoid(trivial_monoid(aut.input_alphabet()), aut);
    Configuration start = start_configuration(aut);
    return CorpusMachine{"single-pop", std::move(aut), std::move(m), {std::move(start)}};
}

std::string table1_machine_text()
{
    return "# Operations push^2(e), pop^1, pop^2, pop^1, push^1(d), pop^1 from [ab][cd]\n"
           "level 2\n"
           "collapsible false\n"
           "input-alphabet [ ]\n"
           "stack-alphabet a b c d e\n"
           "states q0 q1 q2 q3 q4 q5 q6\n"
           "initial-state q0\n"
           "initial-symbol a\n"
           "accepting q6\n"
           "trans q0 d in [ q1 push 2 e\n"
           "trans q1 e eps q2 pop 1\n"
           "trans q2 c eps q3 pop 2\n"
           "trans q3 d in ] q4 pop 1\n"
           "trans q4 c eps q5 push 1 d\n"
           "trans q5 d eps q6 pop 1\n"
           "start-stack [[(a,1) (b,2)] [(c,3) (d,4)]]\n"
           "scenario-word [@0 ]@4\n";
}

std::string table1_word() { return "[@0 ]@4"; }

CorpusMachine table1_machine()
{
    Automaton aut = automaton_from_text(table1_machine_text());
    FiniteMonoid m = bound_monoid(shape_monoid(), aut);
    Configuration start = start_configuration(aut);
    return CorpusMachine{"table1", std::move(aut), std::move(m), {std::move(start)}};
}

Run table1_run()
{
    const Automaton aut = automaton_from_text(table1_machine_text());
    Outcome o = execute_word(aut, to_input_word(aut, parse_data_word(table1_word())), default_eps_budget,
                             start_configuration(aut));
    if (!o.accepted() || o.run.length() != 6) throw std::logic_error("classification example run is broken");
    return o.run;
}

CorpusMachine u_machine()
{
    Automaton aut = build_u_recognizer();
    FiniteMonoid m = bound_monoid(shape_monoid(), aut);
    std::vector<Configuration> starts{initial_configuration(aut)};
    for (const char* prefix : {"[@1", "[@1 [@2", "[@1 ]@1", "[@1 [@2 ]@2"}) {
        Outcome o = execute_word(aut, to_input_word(aut, parse_data_word(prefix)));
        starts.push_back(o.run.last());
    }
    return CorpusMachine{"u-recognizer", std::move(aut), std::move(m), std::move(starts)};
}

std::vector<CorpusMachine> random_machines(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    auto pick = [&](std::uint64_t bound) { return static_cast<std::size_t>(rng() % bound); };
    const std::vector<std::string> letters{"[", "]", "$"};
    const std::vector<std::string> symbol_pool{"A", "B", "C"};

    std::vector<CorpusMachine> out;
    for (std::size_t idx = 0; idx < count; ++idx) {
        AutomatonDescription d;
        d.level = 2;
        d.input_alphabet = letters;
        const std::size_t nstates = 2 + pick(2);
        const std::size_t nsyms = 2 + pick(2);
        for (std::size_t q = 0; q < nstates; ++q) d.states.push_back("q" + std::to_string(q));
        d.stack_alphabet.assign(symbol_pool.begin(), symbol_pool.begin() + static_cast<long>(nsyms));
        d.initial_state = "q0";
        d.initial_symbol = "A";
        for (const auto& q : d.states)
            if (pick(2)) d.accepting.push_back(q);

        auto random_op = [&](TransitionSpec& t) {
            const std::size_t r = pick(20);
            if (r < 7) {
                t.kind = OpKind::pop;
                t.level = 1;
            } else if (r < 12) {
                t.kind = OpKind::pop;
                t.level = 2;
            } else {
                t.kind = OpKind::push;
                t.level = r < 16 ? 1 : 2;
                t.symbol = d.stack_alphabet[pick(nsyms)];
            }
            t.target = d.states[pick(nstates)];
        };
        for (const auto& q : d.states) {
            for (const auto& x : d.stack_alphabet) {
                const std::size_t shape = pick(10);
                if (shape < 2) continue;
                if (shape < 4) {
                    TransitionSpec t;
                    t.source = q;
                    t.top = x;
                    random_op(t);
                    d.transitions.push_back(t);
                    continue;
                }
                for (const auto& a : letters) {
                    if (pick(2)) continue;
                    TransitionSpec t;
                    t.source = q;
                    t.top = x;
                    t.letter = a;
                    random_op(t);
                    d.transitions.push_back(t);
                }
            }
        }

        Automaton aut = make_automaton(d);
        std::vector<Configuration> starts{initial_configuration(aut)};
        for (std::size_t seeded = 0; seeded < 3; ++seeded) {
            std::vector<Stack> ones;
            const std::size_t height = 1 + pick(3);
            for (std::size_t h = 0; h < height; ++h) {
                std::vector<Stack> atoms;
                const std::size_t width = 1 + pick(3);
                for (std::size_t w = 0; w < width; ++w)
                    atoms.push_back(Stack::atom(Atom{static_cast<SymbolId>(pick(nsyms)), DataValue::of(1 + pick(4)), {}}));
                ones.push_back(Stack::of(1, std::move(atoms)));
            }
            starts.push_back(make_configuration(aut, static_cast<StateId>(pick(nstates)), Stack::of(2, std::move(ones))));
        }
        FiniteMonoid m = bound_monoid(shape_monoid(), aut);
        out.push_back(CorpusMachine{"random-" + std::to_string(idx), std::move(aut), std::move(m), std::move(starts)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification rendering

std::string classification_header(int n)
{
    std::string h = "j | stack";
    for (int k = 0; k < n; ++k) h += " | " + std::to_string(k) + "-upper";
    for (int k = 1; k <= n; ++k) h += " | " + std::to_string(k) + "-return";
    return h;
}

std::vector<std::string> render_classification(const LineageRun& lr, const std::vector<std::string>& symbol_names)
{
    const ClassificationTable t = classification_table(lr);
    std::vector<std::string> rows;
    for (std::size_t j = 0; j <= lr.length(); ++j) {
        std::string row = std::to_string(j) + " | " + render_stack_compact(lr.run().at(j).stack, symbol_names);
        for (int k = 0; k < t.n; ++k) row += " | " + render_set(t.upper[j][static_cast<std::size_t>(k)]);
        for (int k = 1; k <= t.n; ++k) row += " | " + render_set(t.returns[j][static_cast<std::size_t>(k)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::string> expected_table1()
{
    return {
        "0 | [ab][cd] | {0} | {0} | ∅ | ∅",
        "1 | [ab][cd][ce] | {0,1} | {0,1} | ∅ | ∅",
        "2 | [ab][cd][c] | {2} | {0,1,2} | {0,1} | ∅",
        "3 | [ab][cd] | {0,3} | {0,3} | ∅ | {1,2}",
        "4 | [ab][c] | {4} | {0,3,4} | {0,3} | ∅",
        "5 | [ab][cd] | {4,5} | {0,3,4,5} | ∅ | ∅",
        "6 | [ab][c] | {4,6} | {0,3,4,5,6} | {5} | ∅",
    };
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct TypedMachine {
    const CorpusMachine* machine;
    TypeSystem ts;
};

void stat(SuiteResult& r, std::string key, std::size_t value) { r.stats.emplace_back(std::move(key), std::to_string(value)); }

SuiteResult suite_table1(const SuiteOptions&)
{
    SuiteResult res{"table1", false, {}, {}};
    const CorpusMachine m = table1_machine();
    const LineageRun lr(table1_run());
    const auto rows = render_classification(lr, m.automaton.stack_alphabet());
    const auto expected = expected_table1();
    for (std::size_t j = 0; j < expected.size(); ++j) {
        ++res.report.checked;
        if (j >= rows.size() || rows[j] != expected[j])
            res.report.fail("row " + std::to_string(j) + ": got '" + (j < rows.size() ? rows[j] : "") + "' expected '" +
                            expected[j] + "'");
    }
    if (rows.size() != expected.size()) res.report.fail("row count " + std::to_string(rows.size()));
    ++res.report.checked;
    if (is_k_return(lr, 0, 6, 1)) res.report.fail("R[0..6] classified as a 1-return");
    for (std::size_t i = 0; i <= lr.length(); ++i)
        for (std::size_t j = i; j <= lr.length(); ++j)
            for (int k = 1; k <= lr.level(); ++k) {
                ++res.report.checked;
                if (is_k_return(lr, i, j, k) != is_k_return_remark(lr, i, j, k))
                    res.report.fail("return characterizations disagree on R[" + std::to_string(i) + ".." +
                                    std::to_string(j) + "] k=" + std::to_string(k));
            }
    stat(res, "rows", rows.size());
    res.pass = res.report.hard == 0;
    return res;
}

std::vector<CorpusMachine> full_corpus(const SuiteOptions& opts)
{
    std::vector<CorpusMachine> out;
    out.push_back(single_pop_machine());
    out.push_back(table1_machine());
    out.push_back(u_machine());
    for (auto& m : random_machines(opts.seed, opts.random_machine_count)) out.push_back(std::move(m));
    return out;
}

SuiteResult suite_classifier(const SuiteOptions& opts)
{
    SuiteResult res{"classifier-equivalence", false, {}, {}};
    const auto corpus = full_corpus(opts);
    std::size_t runs = 0;
    std::size_t multi = 0;
    for (const auto& m : corpus) {
        const int n = m.automaton.level();
        for (const auto& start : m.starts) {
            EnumerationSpace space(m.automaton, start);
            space.max_steps = opts.lemma_bound;
            space.universe = {0};
            for (auto v : nonzero_values(start.stack)) space.universe.push_back(v);
            for_each_run(space, [&](const Run& run) {
                ++runs;
                const LineageRun lr(run);
                Decomposer dec(run);
                const auto effects = step_effects(run);
                const std::size_t j = run.length();
                std::size_t first_clean = 0;
                for (std::size_t t = 0; t < j; ++t)
                    if (effects[t].kind == EffectKind::multi_pop) first_clean = t + 1;
                // Subruns containing a multi-removal collapse are outside the propositions.
                multi += first_clean;
                res.report.excluded += first_clean;
                for (std::size_t i = first_clean; i <= j; ++i) {
                    for (int k = 0; k <= n; ++k) {
                        ++res.report.checked;
                        const bool a = is_k_upper(lr, i, j, k);
                        const bool b = dec.is_upper(i, j, k);
                        if (a != b)
                            res.report.fail(m.name + ": R[" + std::to_string(i) + ".." + std::to_string(j) + "] " +
                                            std::to_string(k) + "-upper lineage=" + std::to_string(a) +
                                            " decomposition=" + std::to_string(b));
                    }
                    for (int k = 1; k <= n; ++k) {
                        ++res.report.checked;
                        const bool a = is_k_return(lr, i, j, k);
                        const bool b = dec.is_return(i, j, k);
                        const bool c = is_k_return_remark(lr, i, j, k);
                        if (a != b || a != c)
                            res.report.fail(m.name + ": R[" + std::to_string(i) + ".." + std::to_string(j) + "] " +
                                            std::to_string(k) + "-return lineage=" + std::to_string(a) +
                                            " decomposition=" + std::to_string(b) + " remark=" + std::to_string(c));
                    }
                }
            });
        }
    }
    stat(res, "machines", corpus.size());
    stat(res, "runs", runs);
    stat(res, "multi_pop_subruns", multi);
    res.pass = res.report.hard == 0;
    return res;
}

// Machines (a), (b), optionally (c), and the first typed_random_count random
// machines, each with its saturated type system.
std::vector<CorpusMachine> lemma_corpus(const SuiteOptions& opts, bool with_u)
{
    std::vector<CorpusMachine> out;
    out.push_back(single_pop_machine());
    out.push_back(table1_machine());
    if (with_u) out.push_back(u_machine());
    auto rnd = random_machines(opts.seed, opts.random_machine_count);
    for (std::size_t i = 0; i < rnd.size() && i < opts.typed_random_count; ++i) out.push_back(std::move(rnd[i]));
    return out;
}

// Saturates every machine; a machine exceeding the descriptor cap is a hard
// failure of the suite since the lemma cannot be checked on it.
std::vector<TypedMachine> type_corpus(const std::vector<CorpusMachine>& corpus, SuiteResult& res)
{
    std::vector<TypedMachine> out;
    std::size_t descriptors = 0;
    for (const auto& m : corpus) {
        try {
            TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
            descriptors += ts.stats().interned;
            out.push_back(TypedMachine{&m, std::move(ts)});
        } catch (const SaturationLimit& e) {
            res.report.fail(m.name + ": " + e.what());
        }
    }
    stat(res, "machines", out.size());
    stat(res, "descriptors", descriptors);
    return out;
}

std::vector<std::uint64_t> probe_values(const Configuration& start)
{
    std::vector<std::uint64_t> vs = nonzero_values(start.stack);
    vs.push_back(fresh_value(start.stack));
    return vs;
}

SuiteResult suite_run2type(const SuiteOptions& opts)
{
    SuiteResult res{"run2type", false, {}, {}};
    const auto corpus = lemma_corpus(opts, false);
    const auto typed = type_corpus(corpus, res);
    std::size_t soft_a = 0;
    for (const auto& t : typed) {
        for (const auto& start : t.machine->starts) {
            CheckReport r = check_run2type(t.ts, start, opts.lemma_bound);
            for (auto& e : r.hard_examples) e = t.machine->name + ": " + e;
            for (auto& e : r.soft_examples) e = t.machine->name + ": " + e;
            if (t.machine->name == "single-pop") soft_a += r.soft;
            res.report.merge(r);
        }
    }
    stat(res, "soft_single_pop", soft_a);
    res.pass = res.report.hard == 0 && soft_a == 0;
    return res;
}

// The value 5 read by the pop return on the single-pop machine must be the
// exact idv of the descriptor matching that return.
bool idv_worked_example(std::string& detail)
{
    const CorpusMachine m = single_pop_machine();
    const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
    const Configuration& c = m.starts.front();
    const Outcome o = execute_word(m.automaton, to_input_word(m.automaton, parse_data_word("a@5")), default_eps_budget, c);
    if (!o.accepted() || o.run.length() != 1) {
        detail = "the pop run a@5 does not exist";
        return false;
    }
    const LineageRun lr(o.run);
    if (!is_k_return(lr, 1)) {
        detail = "the pop run is not a 1-return";
        return false;
    }
    const SpineTyping sp = ts.type_of_spine(c.stack, 0);
    std::size_t matches = 0;
    for (const auto& [id, idv] : sp[0].idv) {
        const Descriptor& d = ts.store().get(id);
        if (d.ne || d.p != c.state || d.goal.r != 1 || d.goal.q != o.run.last().state ||
            d.goal.m != phi_of_run(ts.monoid(), o.run))
            continue;
        ++matches;
        if (idv != std::vector<std::uint64_t>{5}) {
            detail = "idv of the matching descriptor differs from {5}";
            return false;
        }
    }
    if (matches != 1) {
        detail = std::to_string(matches) + " matching descriptors instead of 1";
        return false;
    }
    return true;
}

SuiteResult suite_idv(const SuiteOptions& opts)
{
    SuiteResult res{"idv", false, {}, {}};
    const auto corpus = lemma_corpus(opts, false);
    const auto typed = type_corpus(corpus, res);
    std::size_t probes = 0;
    for (const auto& t : typed) {
        for (const auto& start : t.machine->starts) {
            for (auto d : probe_values(start)) {
                ++probes;
                CheckReport r = check_idv(t.ts, start, opts.lemma_bound, d);
                for (auto& e : r.hard_examples) e = t.machine->name + ": " + e;
                for (auto& e : r.soft_examples) e = t.machine->name + ": " + e;
                res.report.merge(r);
            }
        }
    }
    std::string detail;
    ++res.report.checked;
    const bool worked = idv_worked_example(detail);
    if (!worked) res.report.fail("worked example: " + detail);
    stat(res, "value_probes", probes);
    res.stats.emplace_back("worked_example", worked ? "ok" : "failed");
    res.pass = res.report.hard == 0;
    return res;
}

// Sigma choices over the final piece types of levels k+1..n: every subset
// when there are at most 4 descriptors, otherwise the empty choice, the full
// choice and every singleton.
std::vector<std::vector<IdSet>> sigma_choices(const SpineTyping& final_sp, int k, int n)
{
    std::vector<std::pair<int, DescId>> bits;
    for (int l = k + 1; l <= n; ++l)
        for (DescId id : final_sp[l].types()) bits.emplace_back(l, id);
    std::vector<std::vector<IdSet>> out;
    auto from_mask = [&](const std::function<bool(std::size_t)>& in) {
        std::vector<IdSet> s(static_cast<std::size_t>(n + 1));
        for (std::size_t b = 0; b < bits.size(); ++b)
            if (in(b)) s[static_cast<std::size_t>(bits[b].first)].push_back(bits[b].second);
        return s;
    };
    if (bits.size() <= 4) {
        for (std::uint32_t mask = 0; mask < (1u << bits.size()); ++mask)
            out.push_back(from_mask([&](std::size_t b) { return (mask >> b) & 1u; }));
        return out;
    }
    out.push_back(from_mask([](std::size_t) { return false; }));
    out.push_back(from_mask([](std::size_t) { return true; }));
    for (std::size_t one = 0; one < bits.size(); ++one) out.push_back(from_mask([&](std::size_t b) { return b == one; }));
    return out;
}

SuiteResult suite_origin(const SuiteOptions& opts)
{
    SuiteResult res{"origin", false, {}, {}};
    const auto corpus = lemma_corpus(opts, true);
    const auto typed = type_corpus(corpus, res);
    std::size_t upper_runs = 0;
    for (const auto& t : typed) {
        const int n = t.ts.n();
        for (const auto& start : t.machine->starts) {
            const RunPool pool(t.ts, start, opts.transfer_bound);
            const auto values = probe_values(start);
            for (const auto& e : pool.entries) {
                const LineageRun lr(e.run);
                for (int k = 0; k < n; ++k) {
                    if (!e.upper[static_cast<std::size_t>(k)]) continue;
                    ++upper_runs;
                    const SpineTyping final_sp = t.ts.type_of_spine(e.run.last().stack, k);
                    for (const auto& sigma : sigma_choices(final_sp, k, n))
                        for (auto d : values) {
                            CheckReport r = check_origin(t.ts, lr, k, sigma, d, pool);
                            for (auto& x : r.hard_examples) x = t.machine->name + ": " + x;
                            for (auto& x : r.soft_examples) x = t.machine->name + ": " + x;
                            res.report.merge(r);
                        }
                }
            }
        }
    }
    stat(res, "upper_runs", upper_runs);
    res.pass = res.report.hard == 0;
    return res;
}

SuiteResult suite_idv_upper(const SuiteOptions& opts)
{
    SuiteResult res{"idv-upper", false, {}, {}};
    const auto corpus = lemma_corpus(opts, true);
    const auto typed = type_corpus(corpus, res);
    std::size_t triples = 0;
    for (const auto& t : typed) {
        const int n = t.ts.n();
        for (const auto& start : t.machine->starts) {
            const RunPool pool(t.ts, start, opts.transfer_bound);
            const UniquenessIndex uniq(t.ts, start, opts.transfer_bound);
            std::vector<std::uint64_t> values = probe_values(start);
            values.push_back(values.back() + 1);
            for (const auto& e : pool.entries) {
                const LineageRun lr(e.run);
                for (int k = 0; k < n; ++k) {
                    if (!e.upper[static_cast<std::size_t>(k)]) continue;
                    for (std::size_t a = 0; a < values.size(); ++a)
                        for (std::size_t b = a + 1; b < values.size(); ++b) {
                            ++triples;
                            CheckReport r = check_idv_upper(t.ts, lr, k, values[a], values[b], uniq);
                            for (auto& x : r.hard_examples) x = t.machine->name + ": " + x;
                            res.report.merge(r);
                        }
                }
            }
        }
    }
    stat(res, "triples", triples);
    res.pass = res.report.hard == 0;
    return res;
}

DataWord word_from_tokens(const std::vector<std::uint32_t>& tokens)
{
    static const char* letters[] = {"[", "]", "$"};
    DataWord w;
    for (auto t : tokens) w.push_back(DataLetter{letters[t / 3], t % 3});
    return w;
}

SuiteResult suite_u_differential(const SuiteOptions& opts)
{
    SuiteResult res{"u-differential", false, {}, {}};
    const Automaton aut = build_u_recognizer();
    std::size_t members = 0;
    auto compare = [&](const DataWord& w) {
        ++res.report.checked;
        const bool expected = in_u(w).member;
        members += expected;
        const Outcome o = execute_word(aut, to_input_word(aut, w));
        if (o.accepted() != expected)
            res.report.fail("'" + format_data_word(w) + "' recognizer=" + to_string(o.verdict) +
                            " oracle=" + (expected ? "member" : "non-member"));
    };

    std::size_t exhaustive = 0;
    for (std::size_t len = 0; len <= opts.u_exhaustive_length; ++len) {
        std::vector<std::uint32_t> tokens(len, 0);
        while (true) {
            compare(word_from_tokens(tokens));
            ++exhaustive;
            std::size_t pos = 0;
            while (pos < len && ++tokens[pos] == 9) tokens[pos++] = 0;
            if (pos == len) break;
        }
    }

    // Near members: a random prefix, a dollar, and the mirror of the prefix
    // up to its last unmatched opening bracket, then an optional mutation.
    std::mt19937_64 rng(opts.seed);
    auto pick = [&](std::uint64_t bound) { return static_cast<std::uint32_t>(rng() % bound); };
    const std::size_t max_len = opts.u_random_length;
    for (std::size_t count = 0; count < opts.u_random_words; ++count) {
        DataWord w;
        while (true) {
            w.clear();
            const std::size_t plen = pick(max_len / 2 + 1);
            std::vector<std::size_t> open;
            for (std::size_t i = 0; i < plen; ++i) {
                const bool close = !open.empty() && pick(3) == 0;
                w.push_back(DataLetter{close ? "]" : "[", pick(3)});
                if (close)
                    open.pop_back();
                else
                    open.push_back(i);
            }
            const std::size_t p = open.empty() ? 0 : open.back() + 1;
            w.push_back(DataLetter{"$", pick(3)});
            for (std::size_t i = p; i-- > 0;) w.push_back(DataLetter{w[i].letter == "[" ? "]" : "[", w[i].value});
            if (w.size() <= max_len) break;
        }
        switch (pick(6)) {
        case 0: w[pick(static_cast<std::uint64_t>(w.size()))].value = pick(3); break;
        case 1: {
            auto& l = w[pick(static_cast<std::uint64_t>(w.size()))];
            l.letter = l.letter == "[" ? "]" : l.letter == "]" ? "$" : "[";
            break;
        }
        case 2: w.erase(w.begin() + pick(static_cast<std::uint64_t>(w.size()))); break;
        case 3:
            if (w.size() < max_len)
                w.insert(w.begin() + pick(static_cast<std::uint64_t>(w.size() + 1)),
                         DataLetter{pick(2) ? "[" : "]", pick(3)});
            break;
        default: break;
        }
        compare(w);
    }
    stat(res, "exhaustive_words", exhaustive);
    stat(res, "random_words", opts.u_random_words);
    stat(res, "members", members);
    res.pass = res.report.hard == 0;
    return res;
}

MonoidElement shape_oracle(const std::string& w)
{
    if (w.empty()) return 0;
    if (w == "]") return 1;
    if (w[0] == '$') return 2;
    return 3;
}

SuiteResult suite_monoid_laws(const SuiteOptions&)
{
    SuiteResult res{"monoid-laws", false, {}, {}};
    const FiniteMonoid shape = shape_monoid();
    const std::vector<FiniteMonoid> monoids{shape, trivial_monoid({"[", "]", "$"})};
    for (const auto& m : monoids) {
        const std::size_t s = m.size();
        res.report.checked += s * s * s + 2 * s;
        for (const auto& v : validate_monoid(m)) res.report.fail(v.law + ": " + v.detail);
    }
    std::vector<std::string> words{""};
    for (std::size_t len = 1; len <= 4; ++len) {
        const std::size_t first = words.size();
        for (std::size_t i = 0; i < first; ++i)
            if (words[i].size() == len - 1)
                for (const char* c : {"[", "]", "$"}) words.push_back(words[i] + c);
    }
    for (const auto& w : words) {
        ++res.report.checked;
        if (classify_string(shape, w) != shape_oracle(w)) res.report.fail("class of '" + w + "'");
        for (std::size_t cut = 0; cut <= w.size(); ++cut) {
            ++res.report.checked;
            const auto u = w.substr(0, cut);
            const auto v = w.substr(cut);
            if (classify_string(shape, w) != shape.multiply(classify_string(shape, u), classify_string(shape, v)))
                res.report.fail("homomorphism fails on '" + u + "'.'" + v + "'");
        }
    }
    stat(res, "words", words.size());
    res.pass = res.report.hard == 0;
    return res;
}

SuiteResult suite_w_recurrence(const SuiteOptions&)
{
    SuiteResult res{"w-recurrence", false, {}, {}};
    for (unsigned n = 1; n <= 3; ++n) {
        ++res.report.checked;
        if (gen_w(0, n) != "[][") res.report.fail("w_0 differs from [][ for N=" + std::to_string(n));
        std::size_t expected = 3;
        for (unsigned k = 0; k <= 5; ++k) {
            ++res.report.checked;
            const std::size_t len = gen_w(k, n).size();
            if (len != expected || gen_w_length(k, n) != expected)
                res.report.fail("|w_" + std::to_string(k) + "| for N=" + std::to_string(n) + " is " + std::to_string(len) +
                                ", expected " + std::to_string(expected));
            expected = n * expected + n + 1;
        }
    }
    res.pass = res.report.hard == 0;
    return res;
}

const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& suite_table()
{
    static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table{
        {"table1", suite_table1},
        {"classifier-equivalence", suite_classifier},
        {"run2type", suite_run2type},
        {"idv", suite_idv},
        {"origin", suite_origin},
        {"idv-upper", suite_idv_upper},
        {"u-differential", suite_u_differential},
        {"monoid-laws", suite_monoid_laws},
        {"w-recurrence", suite_w_recurrence},
    };
    return table;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"table1", "classifier-equivalence", "run2type", "idv", "origin",
                                                "idv-upper", "u-differential", "monoid-laws", "w-recurrence"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts)
{
    const auto& table = suite_table();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite '" + name + "'");
    return it->second(opts);
}

bool SuiteReport::hard_failure() const
{
    return std::any_of(results.begin(), results.end(), [](const SuiteResult& r) { return !r.pass; });
}

SuiteReport run_suites(const std::vector<std::string>& selection, const SuiteOptions& opts)
{
    SuiteReport rep;
    for (const auto& name : selection.empty() ? suite_names() : selection) rep.results.push_back(run_suite(name, opts));
    return rep;
}

std::string render_result(const SuiteResult& r)
{
    std::ostringstream os;
    os << "suite=" << r.name << " status=" << (r.pass ? "PASS" : "FAIL") << " checked=" << r.report.checked
       << " hard=" << r.report.hard << " soft=" << r.report.soft << " excluded=" << r.report.excluded;
    for (const auto& [k, v] : r.stats) os << ' ' << k << '=' << v;
    os << '\n';
    for (const auto& e : r.report.hard_examples) os << "  hard: " << e << '\n';
    for (const auto& e : r.report.soft_examples) os << "  soft: " << e << '\n';
    return os.str();
}

std::string render_report(const SuiteReport& report)
{
    std::string out;
    for (const auto& r : report.results) out += render_result(r);
    return out;
}

} // namespace hopad
