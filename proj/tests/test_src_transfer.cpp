#include "test_util.hpp"

#include "hopad/harness.hpp"
#include "hopad/src_transfer.hpp"

#include <doctest.h>

using namespace hopad;

namespace {

std::vector<IdSet> empty_sigma(const TypeSystem& ts) { return std::vector<IdSet>(static_cast<std::size_t>(ts.n() + 1)); }

} // namespace

TEST_SUITE("src-transfer")
{
    TEST_CASE("low runs keep the assumptions")
    {
        const CorpusMachine m = table1_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const LineageRun lr(table1_run());
        std::vector<IdSet> sigma = empty_sigma(ts);
        sigma[2] = ts.type_of_spine(lr.run().at(6).stack, 1)[2].types();
        const SrcResult r = compute_src(ts, lr, 3, 6, 1, sigma);
        CHECK(r.k == 1);
        CHECK(r.src[2] == sigma[2]);
        REQUIRE_FALSE(r.provenance.empty());
        CHECK_FALSE(render_src(r, ts).empty());
    }

    TEST_CASE("non-upper runs are rejected")
    {
        const CorpusMachine m = table1_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const LineageRun lr(table1_run());
        CHECK_THROWS_AS(compute_src(ts, lr, 2, 3, 0, empty_sigma(ts)), std::invalid_argument);
    }

    TEST_CASE("a single push with empty assumptions has empty sources")
    {
        const CorpusMachine m = table1_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const LineageRun lr(table1_run());
        const SrcResult r = compute_src(ts, lr, 0, 1, 1, empty_sigma(ts));
        CHECK(r.src[2].empty());
    }

    TEST_CASE("sources of the example lie in the initial types")
    {
        const CorpusMachine m = table1_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const LineageRun lr(table1_run());
        for (std::size_t j : {1u, 3u, 5u, 6u}) {
            if (!is_k_upper(lr, 0, j, 1)) continue;
            CAPTURE(j);
            const LineageRun sub(lr.run().subrun(0, j));
            std::vector<IdSet> sigma = empty_sigma(ts);
            sigma[2] = ts.type_of_spine(sub.run().last().stack, 1)[2].types();
            const SrcResult r = compute_src(ts, sub, 1, sigma);
            CHECK(is_subset(r.src[2], ts.type_of_spine(sub.run().first().stack, 1)[2].types()));
        }
        const LineageRun r03(lr.run().subrun(0, 3));
        std::vector<IdSet> sigma = empty_sigma(ts);
        sigma[2] = ts.type_of_spine(r03.run().last().stack, 1)[2].types();
        const CheckReport c = check_origin(ts, r03, 1, sigma, 3, 5);
        CHECK(c.hard == 0);
    }

    TEST_CASE("origin checks exclude runs outside their hypotheses")
    {
        const CorpusMachine m = table1_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const LineageRun lr(table1_run());
        const CheckReport zero = check_origin(ts, lr, 1, empty_sigma(ts), 0, 3);
        CHECK(zero.checked == 0);
        CHECK(zero.excluded == 1);
        const CheckReport not_upper = check_origin(ts, LineageRun(lr.run().subrun(2, 3)), 0, empty_sigma(ts), 3, 3);
        CHECK(not_upper.checked == 0);
        CHECK(not_upper.hard == 0);
    }

    TEST_CASE("origin on the single pop machine")
    {
        const CorpusMachine m = single_pop_machine();
        const TypeSystem ts = TypeSystem::saturate(m.automaton, m.monoid);
        const RunPool pool(ts, m.starts.front(), 3);
        CHECK_FALSE(pool.truncated);
        CHECK_FALSE(pool.entries.empty());
        for (const auto& e : pool.entries) {
            const LineageRun lr(e.run);
            const CheckReport c = check_origin(ts, lr, 0, empty_sigma(ts), 5, pool);
            CHECK(c.hard == 0);
        }
    }

    TEST_CASE("idv transfer on a swap-symmetric machine")
    {
        // The two lower 1-stacks hold 1 and 2 and are read in the same way
        // later on, so swapping the values gives an indistinguishable stack.
        const Automaton aut = test_util::automaton(
            "level 2\ninput-alphabet a\nstack-alphabet X Y W Z\ninitial-state p\ninitial-symbol X\naccepting v\n"
            "trans p W eps q push 1 Z\ntrans q Z eps r pop 1\ntrans r W eps s pop 2\ntrans s Y in a t pop 1\n"
            "trans t X eps u pop 2\ntrans u Y in a v pop 1\n"
            "start-stack [[(X,-) (Y,1)] [(X,-) (Y,2)] [(X,-) (W,-)]]\n");
        FiniteMonoid mon = trivial_monoid(aut.input_alphabet());
        mon.bind(aut.input_alphabet());
        const TypeSystem ts = TypeSystem::saturate(aut, mon);
        const Configuration start = start_configuration(aut);
        const UniquenessIndex idx(ts, start, 7);
        CHECK(idx.exhaustive());
        EnumerationSpace space(aut, start);
        space.max_steps = 7;
        space.normalized_only = true;
        space.universe = default_universe(start.stack);
        std::size_t checked = 0;
        for (const Run& run : enumerate_runs(space)) {
            const LineageRun lr(run);
            for (int k = 0; k <= 2; ++k) {
                if (!is_k_upper(lr, k)) continue;
                for (std::uint64_t d : {1u, 2u})
                    for (std::uint64_t d2 : {1u, 2u}) {
                        const CheckReport c = check_idv_upper(ts, lr, k, d, d2, idx);
                        CHECK(c.hard == 0);
                        checked += c.checked;
                    }
            }
        }
        CHECK(checked > 0);
    }
}
