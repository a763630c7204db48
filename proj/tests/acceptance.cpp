// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "hopad/harness.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace hopad;

namespace {

struct Timed {
    SuiteResult result;
    double seconds = 0;
};

Timed timed_suite(const std::string& name, const SuiteOptions& opts)
{
    const auto t0 = std::chrono::steady_clock::now();
    Timed t{run_suite(name, opts), 0};
    t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return t;
}

std::string stat_of(const SuiteResult& r, const std::string& key)
{
    for (const auto& [k, v] : r.stats)
        if (k == key) return v;
    return "";
}

std::string summary(const Timed& t)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.2fs)", t.seconds);
    return "checked=" + std::to_string(t.result.report.checked) + " hard=" + std::to_string(t.result.report.hard) +
           " soft=" + std::to_string(t.result.report.soft) + buf;
}

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail)
{
    if (!ok) ++failures;
    std::printf("%s criterion %d: %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
}

} // namespace

int main()
{
    const SuiteOptions opts;

    {
        const Timed t = timed_suite("table1", opts);
        report(1, "classification table", t.result.pass && t.seconds < 1.0, summary(t));
    }
    {
        const Timed t = timed_suite("u-differential", opts);
        const bool counts = stat_of(t.result, "exhaustive_words") == "597871" && stat_of(t.result, "random_words") == "10000";
        report(2, "U recognizer differential", t.result.pass && counts && t.seconds < 60.0,
               summary(t) + " exhaustive=" + stat_of(t.result, "exhaustive_words") +
                   " random=" + stat_of(t.result, "random_words"));
    }
    {
        const Timed t = timed_suite("classifier-equivalence", opts);
        report(3, "classifier equivalence", t.result.pass && t.seconds < 120.0,
               summary(t) + " machines=" + stat_of(t.result, "machines"));
    }
    {
        const Timed t = timed_suite("run2type", opts);
        const bool ok = t.result.pass && stat_of(t.result, "machines") == "22" &&
                        stat_of(t.result, "soft_single_pop") == "0";
        report(4, "run to type", ok,
               summary(t) + " machines=" + stat_of(t.result, "machines") +
                   " soft_single_pop=" + stat_of(t.result, "soft_single_pop"));
    }
    {
        const Timed t = timed_suite("idv", opts);
        report(5, "important data values", t.result.pass && stat_of(t.result, "worked_example") == "ok",
               summary(t) + " worked_example=" + stat_of(t.result, "worked_example"));
    }
    {
        const Timed t = timed_suite("origin", opts);
        report(6, "src origin", t.result.pass && t.result.report.hard == 0 && t.result.report.checked > 0, summary(t));
    }
    {
        const Timed t = timed_suite("idv-upper", opts);
        report(7, "idv transfer", t.result.pass && t.result.report.hard == 0 && t.result.report.checked > 0,
               summary(t));
    }
    {
        const Timed t = timed_suite("monoid-laws", opts);
        report(8, "monoid laws", t.result.pass, summary(t));
    }
    {
        const Timed t = timed_suite("w-recurrence", opts);
        report(9, "witness word recurrence", t.result.pass, summary(t));
    }
    {
        bool same = true;
        std::string first_diff;
        for (const auto& name : suite_names()) {
            const std::string a = render_result(run_suite(name, opts));
            const std::string b = render_result(run_suite(name, opts));
            if (a != b) {
                same = false;
                if (first_diff.empty()) first_diff = name;
            }
        }
        report(10, "deterministic reports", same,
               same ? std::to_string(suite_names().size()) + " suites identical across two runs"
                    : "suite " + first_diff + " differs");
    }
    return failures == 0 ? 0 : 1;
}
