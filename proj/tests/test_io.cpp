#include <doctest.h>

#include <sstream>

#include "snd/builder.hpp"
#include "snd/io.hpp"
#include "snd/render.hpp"

using namespace snd;

TEST_CASE("percent coding survives the paper's glue alphabet") {
    std::string label = "inc/⟨least_significant_value_bit, carry=1⟩";
    std::string enc = percent_encode(label);
    CHECK(enc.find(' ') == std::string::npos);
    CHECK(enc.find('=') == std::string::npos);
    CHECK(percent_decode(enc) == label);
    CHECK(percent_encode("plain-label_1.0~x") == "plain-label_1.0~x");
}

TEST_CASE("tasfile round trip is the identity on the parsed structure") {
    for (const char* name : {"fig1", "snd_demo", "conclusion_gadget"}) {
        GeneratedTas gen = build_fixture(name);
        std::string text = serialize_tas(*gen.tas);
        std::istringstream in(text);
        auto parsed = parse_tas(in);
        CHECK(serialize_tas(*parsed) == text);
        CHECK(parsed->tiles().size() == gen.tas->tiles().size());
        CHECK(parsed->seed_point() == gen.tas->seed_point());
        for (std::size_t i = 0; i < parsed->tiles().size(); ++i) {
            const TileType& a = parsed->tiles()[static_cast<int>(i)];
            const TileType& b = gen.tas->tiles().by_name(a.name);
            CHECK(a.north == b.north);
            CHECK(a.east == b.east);
            CHECK(a.south == b.south);
            CHECK(a.west == b.west);
        }
    }
}

TEST_CASE("counter tasfile with bracketed glue labels round trips") {
    BuildParams p = derive_parameters(40, Rational(1, 2), 40);
    GeneratedTas gen = build_counter(p);
    std::string text = serialize_tas(*gen.tas);
    std::istringstream in(text);
    auto parsed = parse_tas(in);
    CHECK(serialize_tas(*parsed) == text);

    std::string decl_text = serialize_decl(gen.decl);
    std::istringstream din(decl_text);
    SndDeclaration decl = parse_decl(din);
    CHECK(serialize_decl(decl) == decl_text);
    CHECK(decl.pocs == gen.decl.pocs);
    CHECK(decl.competitions.size() == gen.decl.competitions.size());
    for (std::size_t i = 0; i < decl.competitions.size(); ++i) {
        CHECK(decl.competitions[i].l_win() == gen.decl.competitions[i].l_win());
        CHECK(decl.competitions[i].rigged == gen.decl.competitions[i].rigged);
    }

    std::string shape_text = serialize_shape(gen.expected_domain);
    std::istringstream sin(shape_text);
    CHECK(parse_shape(sin) == gen.expected_domain);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad_header("tosfile v1\n");
    CHECK_THROWS_AS(parse_tas(bad_header), ParseError);

    std::istringstream bad_tile("tasfile v1\ntile x n=-:0\n");
    try {
        parse_tas(bad_tile);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::istringstream no_seed("tasfile v1\ntile x n=-:0 e=-:0 s=-:0 w=-:0\n");
    CHECK_THROWS_AS(parse_tas(no_seed), ParseError);

    std::istringstream dup_seed(
        "tasfile v1\ntile x n=-:0 e=-:0 s=-:0 w=-:0\nseed x 0 0\nseed x 1 0\n");
    CHECK_THROWS_AS(parse_tas(dup_seed), ParseError);

    std::istringstream zero_strength("tasfile v1\ntile x n=a:0 e=-:0 s=-:0 w=-:0\nseed x 0 0\n");
    CHECK_THROWS_AS(parse_tas(zero_strength), ParseError);
}

TEST_CASE("renderers cover every placed tile") {
    GeneratedTas fig1 = build_fixture("fig1");
    Assembly full;
    for (const auto& [pt, name] : fig1.expected_terminal)
        full.place(pt, fig1.tas->tiles().id_of(name));
    std::string ascii = render_ascii(*fig1.tas, full, &fig1.decl);
    CHECK(ascii.find('*') != std::string::npos);  // POC marker
    std::string svg = render_svg(*fig1.tas, full, &fig1.decl);
    CHECK(svg.find("<svg") != std::string::npos);
    std::size_t rects = 0;
    for (std::size_t at = svg.find("<rect"); at != std::string::npos;
         at = svg.find("<rect", at + 1))
        ++rects;
    CHECK(rects == full.size());
}
