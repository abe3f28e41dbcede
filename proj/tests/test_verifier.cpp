#include <doctest.h>

#include "snd/builder.hpp"
#include "snd/verifier.hpp"

using namespace snd;

namespace {

// fig1 plus two tile types that both attach at the same non-POC point via
// the same glue: agreeing assemblies then place distinct types there, which
// directional determinism forbids.
GeneratedTas make_dd_but_disagree() {
    GeneratedTas fig1 = build_fixture("fig1");
    TileSet tiles;
    for (const TileType& t : fig1.tas->tiles().all()) {
        TileType copy = t;
        if (copy.name == "2") copy.north = glue1("g_2uv");
        tiles.add(copy);
    }
    tiles.add(TileType{"U", {}, {}, glue1("g_2uv"), {}});
    tiles.add(TileType{"V", {}, {}, glue1("g_2uv"), {}});
    GeneratedTas out;
    out.decl = fig1.decl;
    out.tas = std::make_unique<Tas>(std::move(tiles), fig1.tas->seed_point(), "s");
    return out;
}

}  // namespace

TEST_CASE("directional determinism passes on the worked examples") {
    for (const char* name : {"fig1", "fig2", "snd_demo", "conclusion_gadget"}) {
        GeneratedTas gen = build_fixture(name);
        CheckResult res = check_directional_determinism(*gen.tas, gen.decl, 100, 100000);
        CHECK(res.status == CheckStatus::Pass);
    }
}

TEST_CASE("two agreeing assemblies placing distinct types at a non-POC fail") {
    GeneratedTas bad = make_dd_but_disagree();
    CheckResult res = check_directional_determinism(*bad.tas, bad.decl, 100, 100000);
    CHECK(res.status == CheckStatus::Fail);
    CHECK(res.detail.find("non-POC") != std::string::npos);
    CHECK(res.detail.find("witness") != std::string::npos);
}

TEST_CASE("bounded enumeration on the counter is pass-or-inconclusive") {
    BuildParams p = derive_parameters(40, Rational(1, 2), 40);
    GeneratedTas gen = build_counter(p);
    CheckResult res = check_directional_determinism(*gen.tas, gen.decl, 30, 400);
    CHECK(res.status != CheckStatus::Fail);
}

TEST_CASE("POC order holds on sampled counter traces") {
    BuildParams p = derive_parameters(40, Rational(1, 2), 40);
    GeneratedTas gen = build_counter(p);
    std::uint64_t cap = 16 * gen.expected_domain.size();
    CheckResult res = check_poc_order(*gen.tas, gen.decl, 50, 21, cap);
    CHECK(res.status == CheckStatus::Pass);

    SUBCASE("swapping two POCs breaks the ordering") {
        SndDeclaration swapped = gen.decl;
        std::swap(swapped.pocs[0], swapped.pocs[1]);
        std::swap(swapped.starts[0], swapped.starts[1]);
        CheckResult bad = check_poc_order(*gen.tas, swapped, 50, 21, cap);
        CHECK(bad.status == CheckStatus::Fail);
    }
}

TEST_CASE("POC order with a single competition reduces to start-before-POC") {
    GeneratedTas fig1 = build_fixture("fig1");
    CheckResult res = check_poc_order(*fig1.tas, fig1.decl, 200, 3, 100);
    CHECK(res.status == CheckStatus::Pass);
}

TEST_CASE("w-correctness of assemblies against the declaration") {
    BuildParams p = derive_parameters(40, Rational(1, 2), 40);
    GeneratedTas gen = build_counter(p);
    Assembly full;
    for (const auto& [pt, name] : gen.expected_terminal)
        full.place(pt, gen.tas->tiles().id_of(name));
    CHECK(check_w_correct(*gen.tas, full, gen.decl));

    // Seed-only assemblies are vacuously w-correct.
    Assembly seed = gen.tas->seed_assembly();
    CHECK(check_w_correct(*gen.tas, seed, gen.decl));

    // Swapping one POC tile to the loser breaks w-correctness.
    Point poc = gen.decl.pocs.front();
    const CompetitionSpec& comp = gen.decl.competitions.front();
    std::string winner = gen.decl.winner.at(poc);
    std::string loser = winner;
    auto slash = winner.rfind("poc");
    loser = winner.substr(0, slash) + (winner.substr(slash) == "poc0" ? "poc1" : "poc0");
    Assembly wrong;
    for (const auto& [pt, name] : gen.expected_terminal)
        wrong.place(pt, gen.tas->tiles().id_of(pt == poc ? loser : name));
    CHECK_FALSE(check_w_correct(*gen.tas, wrong, gen.decl));
    (void)comp;
}

TEST_CASE("rigged detection on counter prefixes") {
    BuildParams p = derive_parameters(40, Rational(1, 2), 40);
    GeneratedTas gen = build_counter(p);

    // Grow the w-correct terminal but stop the moment each competition's
    // start point is placed, giving a prefix for the rigging test.
    for (std::size_t ci = 0; ci < gen.decl.competitions.size(); ++ci) {
        const CompetitionSpec& comp = gen.decl.competitions[ci];
        Assembly a = gen.tas->seed_assembly();
        Frontier frontier_set(*gen.tas, a);
        while (!a.occupied(comp.start)) {
            const Option* pick = nullptr;
            for (const Option& o : frontier_set.options()) {
                if (gen.decl.is_poc(o.point)) {
                    auto it = gen.decl.winner.find(o.point);
                    if (gen.tas->tiles()[o.tile].name != it->second) continue;
                }
                // Never run past the start of the competition under test.
                pick = &o;
                break;
            }
            REQUIRE(pick != nullptr);
            Option o = *pick;
            a.place(o.point, o.tile);
            frontier_set.after_attach(a, o.point);
        }
        CHECK(is_rigged_by(*gen.tas, comp, a) == comp.rigged);
    }
}

TEST_CASE("rigged is false when the losing path is untouched") {
    GeneratedTas fig1 = build_fixture("fig1");
    Assembly seed = fig1.tas->seed_assembly();
    CHECK_FALSE(is_rigged_by(*fig1.tas, fig1.decl.competitions[0], seed));
}
