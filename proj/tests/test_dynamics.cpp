#include <doctest.h>

#include "snd/builder.hpp"
#include "snd/dynamics.hpp"
#include "snd/montecarlo.hpp"

using namespace snd;

TEST_CASE("step option counts") {
    GeneratedTas fig1 = build_fixture("fig1");
    CHECK(step_options(*fig1.tas, fig1.tas->seed_assembly()).count() == 2);

    GeneratedTas fig2 = build_fixture("fig2");
    CHECK(step_options(*fig2.tas, fig2.tas->seed_assembly()).count() == 3);

    // Terminal assemblies have no options.
    Assembly full;
    for (const auto& [p, name] : fig1.expected_terminal)
        full.place(p, fig1.tas->tiles().id_of(name));
    CHECK(step_options(*fig1.tas, full).count() == 0);
}

TEST_CASE("run_sequence reaches a terminal of the shared fig1 shape") {
    GeneratedTas fig1 = build_fixture("fig1");
    for (std::uint64_t seed = 0; seed < 64; ++seed) {
        SequenceResult r = run_sequence(*fig1.tas, seed, 10, true);
        CHECK(r.status == RunStatus::Terminal);
        // Both outcomes fill the same four points; the POC holds 3 or 4.
        CHECK(r.final.size() == 4);
        CHECK(r.steps == r.final.size() - 1);
        int poc = r.final.at({-1, 0});
        std::string name = fig1.tas->tiles()[poc].name;
        CHECK((name == "3" || name == "4"));
        // Replaying the trace through attachable never fails and domains
        // grow monotonically.
        Assembly replay(r.trace[0].point, r.trace[0].tile);
        for (std::size_t i = 1; i < r.trace.size(); ++i) {
            CHECK(attachable(*fig1.tas, replay, r.trace[i].point, r.trace[i].tile));
            replay.place(r.trace[i].point, r.trace[i].tile);
        }
        CHECK(replay == r.final);
    }
    CHECK_THROWS_AS(run_sequence(*fig1.tas, 1, 0, false), std::invalid_argument);
}

TEST_CASE("identical seeds give identical traces") {
    GeneratedTas demo = build_fixture("snd_demo");
    SequenceResult a = run_sequence(*demo.tas, 12345, 100, true);
    SequenceResult b = run_sequence(*demo.tas, 12345, 100, true);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].point == b.trace[i].point);
        CHECK(a.trace[i].tile == b.trace[i].tile);
    }
}

TEST_CASE("step cap exceedance is a status, not an error") {
    GeneratedTas demo = build_fixture("snd_demo");
    SequenceResult r = run_sequence(*demo.tas, 9, 2, false);
    CHECK(r.status == RunStatus::StepCapExceeded);
    CHECK(r.final.size() == 3);  // seed plus two steps
}

TEST_CASE("index_of reports 1-based placement steps") {
    GeneratedTas fig1 = build_fixture("fig1");
    SequenceResult r = run_sequence(*fig1.tas, 3, 10, true);
    CHECK(index_of(*fig1.tas, r.trace, fig1.tas->seed_point()) == 1);
    CHECK_FALSE(index_of(*fig1.tas, r.trace, {99, 99}).has_value());
    // The start point precedes the POC in every terminal trace.
    auto ix = index_of(*fig1.tas, r.trace, {0, 0});
    auto iy = index_of(*fig1.tas, r.trace, {-1, 0});
    REQUIRE(ix.has_value());
    REQUIRE(iy.has_value());
    CHECK(*ix < *iy);
}

TEST_CASE("root options are sampled uniformly (chi-square style bound)") {
    GeneratedTas fig2 = build_fixture("fig2");
    const std::uint64_t trials = 30000;
    std::map<std::string, std::uint64_t> first_step;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SequenceResult r = run_sequence(*fig2.tas, derive_seed(42, t), 20, true);
        first_step[to_string(r.trace[1].point)]++;
    }
    REQUIRE(first_step.size() == 3);
    double expect = trials / 3.0;
    double chi2 = 0;
    for (const auto& [pt, count] : first_step) {
        double d = static_cast<double>(count) - expect;
        chi2 += d * d / expect;
    }
    CHECK(chi2 < 13.8);  // 0.999 quantile of chi-square with 2 dof
}

TEST_CASE("counter runs terminate well inside the step cap") {
    BuildParams p = derive_parameters(13, Rational(9, 10), 13);  // comb regime
    GeneratedTas gen = build_counter(p);
    std::uint64_t cap = 4 * gen.expected_domain.size();
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        SequenceResult r = run_sequence(*gen.tas, seed, cap, false);
        CHECK(r.status == RunStatus::Terminal);
        CHECK(r.final.size() == gen.expected_domain.size());
    }
}
