#include <doctest.h>

#include "oracles.hpp"
#include "snd/builder.hpp"
#include "snd/dynamics.hpp"

using namespace snd;

TEST_CASE("glue binding requires equal label, equal strength, positive strength") {
    CHECK(glues_bind(glue1("a"), glue1("a")));
    CHECK_FALSE(glues_bind(glue1("a"), glue1("b")));
    CHECK_FALSE(glues_bind(null_glue(), null_glue()));
    CHECK_FALSE(glues_bind(Glue("a", 2), glue1("a")));
    CHECK_THROWS_AS(Glue("", 1), std::invalid_argument);
    CHECK_THROWS_AS(Glue("x", 0), std::invalid_argument);
}

TEST_CASE("attachable on the fig1 fixture") {
    GeneratedTas fig1 = build_fixture("fig1");
    const Tas& tas = *fig1.tas;
    Assembly seed = tas.seed_assembly();

    // The "4" tile attaches directly west of the seed.
    CHECK(attachable(tas, seed, {-1, 0}, "4"));
    // Occupied points never admit attachments.
    CHECK_FALSE(attachable(tas, seed, {0, 0}, "4"));
    // Disconnected placements never attach.
    CHECK_FALSE(attachable(tas, seed, {5, 5}, "1"));
    // Unknown tile types are rejected.
    CHECK_THROWS_AS(attachable(tas, seed, {-1, 0}, "nope"), std::invalid_argument);
}

TEST_CASE("frontier of the fig1 seed holds exactly the two first race steps") {
    GeneratedTas fig1 = build_fixture("fig1");
    auto opts = frontier(*fig1.tas, fig1.tas->seed_assembly());
    REQUIRE(opts.size() == 2);
    // Deterministic ordering: lexicographic by (x, y, tile name).
    CHECK(opts[0].point == Point{-1, 0});
    CHECK(fig1.tas->tiles()[opts[0].tile].name == "4");
    CHECK(opts[1].point == Point{0, 1});
    CHECK(fig1.tas->tiles()[opts[1].tile].name == "1");
}

TEST_CASE("attach has value semantics and grows the domain by one") {
    GeneratedTas fig1 = build_fixture("fig1");
    const Tas& tas = *fig1.tas;
    Assembly seed = tas.seed_assembly();
    Assembly next = attach(tas, seed, {-1, 0}, "4");
    CHECK(seed.size() == 1);
    CHECK(next.size() == 2);
    CHECK_THROWS_AS(attach(tas, next, {-1, 0}, "4"), AttachmentError);
    // The filled point leaves the frontier.
    for (const Option& o : frontier(tas, next)) CHECK(o.point != Point{-1, 0});
}

TEST_CASE("binding graph edge counts on fig1 terminals") {
    GeneratedTas fig1 = build_fixture("fig1");
    const Tas& tas = *fig1.tas;
    Assembly a = tas.seed_assembly();
    CHECK(binding_graph(tas.tiles(), a).empty());

    a = attach(tas, a, {0, 1}, "1");
    CHECK(binding_graph(tas.tiles(), a).size() == 1);

    // Losing-path terminal: the chain s-1-2-3 has exactly three edges; the
    // "3" tile does not bind the seed across the fourth adjacency.
    a = attach(tas, a, {-1, 1}, "2");
    a = attach(tas, a, {-1, 0}, "3");
    CHECK(binding_graph(tas.tiles(), a).size() == 3);
    CHECK(frontier(tas, a).empty());
    CHECK(tau1_stable(tas.tiles(), a));
}

TEST_CASE("terminal assemblies of the generated counter have empty frontiers") {
    BuildParams p = derive_parameters(14, Rational(1, 2), 14);  // comb regime
    GeneratedTas gen = build_counter(p);
    Assembly full;
    for (const auto& [pt, name] : gen.expected_terminal)
        full.place(pt, gen.tas->tiles().id_of(name));
    CHECK(frontier(*gen.tas, full).empty());
    CHECK(tau1_stable(gen.tas->tiles(), full));
}

TEST_CASE("incrementally maintained frontier equals recomputation from scratch") {
    GeneratedTas demo = build_fixture("snd_demo");
    const Tas& tas = *demo.tas;
    Assembly a = tas.seed_assembly();
    Frontier inc(tas, a);
    std::mt19937_64 rng(7);
    while (!inc.empty()) {
        std::vector<Option> scratch = frontier(tas, a);
        REQUIRE(scratch.size() == inc.count());
        std::size_t i = 0;
        for (const Option& o : inc.options()) CHECK(o == scratch[i++]);
        Option pick = inc.nth(rng() % inc.count());
        a.place(pick.point, pick.tile);
        inc.after_attach(a, pick.point);
    }
    CHECK(frontier(tas, a).empty());
}

TEST_CASE("every reachable assembly stays tau-1 stable") {
    GeneratedTas fig2 = build_fixture("fig2");
    for (const std::string& key : oracle::producible_assemblies(*fig2.tas)) {
        // Keys are canonical "x,y,id;" strings; reparse into an assembly.
        Assembly a;
        std::size_t pos = 0;
        while (pos < key.size()) {
            auto semi = key.find(';', pos);
            std::string item = key.substr(pos, semi - pos);
            auto c1 = item.find(','), c2 = item.rfind(',');
            a.place({std::stoll(item.substr(0, c1)), std::stoll(item.substr(c1 + 1, c2 - c1 - 1))},
                    std::stoi(item.substr(c2 + 1)));
            pos = semi + 1;
        }
        CHECK(tau1_stable(fig2.tas->tiles(), a));
    }
}
