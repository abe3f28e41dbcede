#include "builder_internal.hpp"
#include "snd/builder.hpp"

namespace snd {

using detail::Emitter;

namespace {

// Shared base of fig1/fig2/snd_demo: seed at the origin, a (2,4) race for
// the point west of the seed. The "4" tile attaches directly from the east
// (off the seed), the "3" tile arrives over the top via tiles 1 and 2.
struct RaceCore {
    Emitter em;
    Point y1{-1, 0};

    RaceCore() {
        em.tile("s").north = glue1("g_s1");
        em.tile("s").west = glue1("g_s4");
        em.tile("1").south = glue1("g_s1");
        em.tile("1").west = glue1("g_12");
        em.tile("2").east = glue1("g_12");
        em.tile("2").south = glue1("g_23");
        em.tile("3").north = glue1("g_23");
        em.tile("4").east = glue1("g_s4");
    }

    CompetitionSpec competition(const std::string& winner) const {
        CompetitionSpec c;
        c.start = {0, 0};
        c.poc = y1;
        c.winning_path = {{0, 0}, y1};
        c.losing_path = {{0, 0}, {0, 1}, {-1, 1}, y1};
        c.winner_tile = winner;
        return c;
    }
};

GeneratedTas finish(Emitter& em, Point seed, const std::string& seed_name, SndDeclaration decl,
                    std::map<Point, std::string> terminal) {
    GeneratedTas out;
    out.decl = std::move(decl);
    out.expected_terminal = std::move(terminal);
    for (const auto& [p, t] : out.expected_terminal) out.expected_domain.insert(p);
    out.tile_count = em.tile_count();
    out.provenance = em.provenance;
    out.tas = std::make_unique<Tas>(em.freeze(), seed, seed_name);
    return out;
}

GeneratedTas make_fig(bool with_branches) {
    RaceCore core;
    std::map<Point, std::string> terminal{
        {{0, 0}, "s"}, {{0, 1}, "1"}, {{-1, 1}, "2"}, {core.y1, "4"}};
    if (with_branches) {
        core.em.tile("s").east = glue1("g_sB");
        core.em.tile("B").west = glue1("g_sB");
        core.em.tile("1").east = glue1("g_1A");
        core.em.tile("A").west = glue1("g_1A");
        terminal[{1, 0}] = "B";
        terminal[{1, 1}] = "A";
    }
    SndDeclaration decl;
    decl.pocs = {core.y1};
    decl.starts = {{0, 0}};
    decl.winner[core.y1] = "4";
    decl.competitions = {core.competition("4")};
    core.em.provenance.push_back(with_branches ? "fig2: fig1 plus side tiles A,B" : "fig1");
    return finish(core.em, {0, 0}, "s", std::move(decl), std::move(terminal));
}

// The two-competition example: a (2,4) race decides y1; only the "4"
// outcome continues into a (3,3) race for y2, whose loser grows one extra
// tile so all three terminal shapes differ.
GeneratedTas make_snd_demo() {
    RaceCore core;
    Emitter& em = core.em;
    em.tile("s").east = glue1("g_sB");
    em.tile("B").west = glue1("g_sB");
    em.tile("1").east = glue1("g_1A");
    em.tile("A").west = glue1("g_1A");

    em.tile("3").west = glue1("g_3C");
    em.tile("C").east = glue1("g_3C");
    em.tile("4").west = glue1("g_45");
    em.tile("5").east = glue1("g_45");
    em.tile("5").west = glue1("g_56");
    em.tile("5").south = glue1("g_58");
    em.tile("6").east = glue1("g_56");
    em.tile("6").south = glue1("g_67");
    em.tile("7").north = glue1("g_67");
    em.tile("8").north = glue1("g_58");
    em.tile("8").west = glue1("g_89");
    em.tile("9").east = glue1("g_89");
    em.tile("9").west = glue1("g_9a");
    em.tile("10").east = glue1("g_9a");

    Point y2{-3, -1}, x2{-2, 0};
    SndDeclaration decl;
    decl.pocs = {core.y1, y2};
    decl.starts = {{0, 0}, x2};
    decl.winner[core.y1] = "4";
    decl.winner[y2] = "7";
    CompetitionSpec c2;
    c2.start = x2;
    c2.poc = y2;
    c2.winning_path = {x2, {-3, 0}, y2};
    c2.losing_path = {x2, {-2, -1}, y2};
    c2.winner_tile = "7";
    decl.competitions = {core.competition("4"), c2};

    std::map<Point, std::string> terminal{{{0, 0}, "s"}, {{0, 1}, "1"},  {{-1, 1}, "2"},
                                          {core.y1, "4"}, {{1, 0}, "B"}, {{1, 1}, "A"},
                                          {x2, "5"},      {{-3, 0}, "6"}, {y2, "7"},
                                          {{-2, -1}, "8"}};
    em.provenance.push_back("snd_demo: competitions (2,4) then (3,3)");
    return finish(em, {0, 0}, "s", std::move(decl), std::move(terminal));
}

// Three chained (2,4) races. Winning all three places the "7" tile at the
// final point; losing any race diverts along a corridor that places the
// check tile there instead, so the check probability is 1 - (7/8)^3.
GeneratedTas make_conclusion_gadget() {
    Emitter em;
    Point pstar{6, 0};
    SndDeclaration decl;
    std::map<Point, std::string> terminal;

    auto add_stage = [&](int i) {
        std::string si = std::to_string(i);
        Point x{2 * i, 0}, y{2 * i + 1, 0};
        Point up1{2 * i, 1}, up2{2 * i + 1, 1};
        std::string start_tile = i == 0 ? "s" : "x" + si;
        std::string win = "w" + si, lose = "l" + si;
        std::string a = "a" + si, b = "b" + si;
        em.tile(start_tile).east = glue1("g_w" + si);
        em.tile(win).west = glue1("g_w" + si);
        em.tile(start_tile).north = glue1("g_a" + si);
        em.tile(a).south = glue1("g_a" + si);
        em.tile(a).east = glue1("g_b" + si);
        em.tile(b).west = glue1("g_b" + si);
        em.tile(b).south = glue1("g_l" + si);
        em.tile(lose).north = glue1("g_l" + si);

        CompetitionSpec c;
        c.start = x;
        c.poc = y;
        c.winning_path = {x, y};
        c.losing_path = {x, up1, up2, y};
        c.winner_tile = win;
        decl.pocs.push_back(y);
        decl.starts.push_back(x);
        decl.winner[y] = win;
        decl.competitions.push_back(c);

        terminal[x] = start_tile;
        terminal[y] = win;
        terminal[up1] = a;
        terminal[up2] = b;
    };
    add_stage(0);
    add_stage(1);
    add_stage(2);
    // Winner chain connectors: w_i feeds x_{i+1}; w_2 feeds the "7" tile.
    em.tile("w0").east = glue1("g_x1");
    em.tile("x1").west = glue1("g_x1");
    em.tile("w1").east = glue1("g_x2");
    em.tile("x2").west = glue1("g_x2");
    em.tile("w2").east = glue1("g_seven");
    em.tile("seven").west = glue1("g_seven");
    terminal[pstar] = "seven";

    // Diversion corridors: when the loser tile wins a race it starts a path
    // to the cell below pstar; a shared north glue there admits the check
    // tile from the south in every diverted outcome.
    const std::string g_check = "g_check_up";
    em.tile("check").south = glue1(g_check);
    // Corridor from l0 at (1,0): south then east along y=-1 to (6,-1).
    em.tile("l0").south = glue1("g_c0");
    detail::lay_chain(em, "c0", {{1, -1}, {2, -1}, {3, -1}, {4, -1}, {5, -1}, {6, -1}},
                      {1, 0}, "g_c0");
    em.tile("c0/5").north = glue1(g_check);
    // Corridor from l1 at (3,0): south, down to y=-2, east, up to (6,-1).
    em.tile("l1").south = glue1("g_c1");
    detail::lay_chain(em, "c1", {{3, -1}, {3, -2}, {4, -2}, {5, -2}, {6, -2}, {6, -1}},
                      {3, 0}, "g_c1");
    em.tile("c1/5").north = glue1(g_check);
    // Corridor from l2 at (5,0): south then east to (6,-1).
    em.tile("l2").south = glue1("g_c2");
    detail::lay_chain(em, "c2", {{5, -1}, {6, -1}}, {5, 0}, "g_c2");
    em.tile("c2/1").north = glue1(g_check);

    em.provenance.push_back("conclusion_gadget: three chained (2,4) races");
    return finish(em, {0, 0}, "s", std::move(decl), std::move(terminal));
}

}  // namespace

GeneratedTas build_race_fixture(long long l_win, long long l_lose) {
    if (l_win < 2 || l_lose < 2) throw std::invalid_argument("race paths need length >= 2");
    if ((l_win + l_lose) % 2 != 0)
        throw std::invalid_argument(
            "race(l, l') needs l = l' (mod 2): lattice paths between fixed "
            "endpoints have lengths of equal parity");
    if (l_win == 2 && l_lose == 2)
        throw std::invalid_argument(
            "race(2,2) is not realizable: both paths would be the same edge");

    bool odd = l_win % 2 == 1;
    Point x{0, 0};
    Point y = odd ? Point{1, 1} : Point{1, 0};
    std::vector<Point> win, lose;
    if (odd) {
        // win dips south by a = (l-3)/2 then climbs column x=1.
        long long a = (l_win - 3) / 2, b = (l_lose - 3) / 2;
        for (long long i = 0; i <= a; ++i) win.push_back({0, -i});
        for (long long j = -a; j <= 1; ++j) win.push_back({1, j});
        for (long long i = 0; i <= b + 1; ++i) lose.push_back({0, i});
        for (long long j = b + 1; j >= 1; --j) lose.push_back({1, j});
    } else {
        long long a = (l_win - 2) / 2, b = (l_lose - 2) / 2;
        for (long long i = 0; i <= a; ++i) win.push_back({0, i});
        for (long long j = a; j >= 0; --j) win.push_back({1, j});
        for (long long i = 0; i <= b; ++i) lose.push_back({0, -i});
        for (long long j = -b; j <= 0; ++j) lose.push_back({1, j});
    }
    if (static_cast<long long>(win.size()) != l_win ||
        static_cast<long long>(lose.size()) != l_lose)
        throw BuildError("race path generation failed");

    Emitter em;
    em.tile("s");
    std::vector<Point> win_mid(win.begin() + 1, win.end() - 1);
    std::vector<Point> lose_mid(lose.begin() + 1, lose.end() - 1);
    std::map<Point, std::string> terminal{{x, "s"}};

    auto lay_path = [&](const std::string& prefix, const std::vector<Point>& mid,
                        const std::vector<Point>& full, const std::string& poc_name) {
        std::string glue_from_seed = "g_" + prefix;
        em.tile("s").side(dir_to(x, full[1])) = glue1(glue_from_seed);
        std::string last = "s";
        if (!mid.empty()) {
            auto names = detail::lay_chain(em, prefix, mid, x, glue_from_seed);
            for (std::size_t i = 0; i < mid.size(); ++i) terminal[mid[i]] = names[i];
            last = names.back();
        }
        // POC tile binds to the path's final interior tile (or the seed).
        Point prev = full[full.size() - 2];
        std::string g = "g_" + poc_name;
        em.tile(last).side(dir_to(prev, y)) = glue1(g);
        em.tile(poc_name).side(dir_to(y, prev)) = glue1(g);
    };
    lay_path("w", win_mid, win, "W");
    lay_path("l", lose_mid, lose, "L");
    terminal[y] = "W";

    SndDeclaration decl;
    decl.pocs = {y};
    decl.starts = {x};
    decl.winner[y] = "W";
    CompetitionSpec c;
    c.start = x;
    c.poc = y;
    c.winning_path = win;
    c.losing_path = lose;
    c.winner_tile = "W";
    decl.competitions = {c};
    em.provenance.push_back("race(" + std::to_string(l_win) + "," + std::to_string(l_lose) + ")");
    return finish(em, x, "s", std::move(decl), std::move(terminal));
}

GeneratedTas build_fixture(const std::string& name) {
    if (name == "fig1") return make_fig(false);
    if (name == "fig2") return make_fig(true);
    if (name == "snd_demo") return make_snd_demo();
    if (name == "conclusion_gadget") return make_conclusion_gadget();
    if (name.rfind("race(", 0) == 0 && name.back() == ')') {
        auto comma = name.find(',');
        if (comma != std::string::npos) {
            long long l = std::stoll(name.substr(5, comma - 5));
            long long lp = std::stoll(name.substr(comma + 1, name.size() - comma - 2));
            return build_race_fixture(l, lp);
        }
    }
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace snd
