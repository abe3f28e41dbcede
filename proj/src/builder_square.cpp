#include "builder_internal.hpp"
#include "snd/builder.hpp"

namespace snd {

namespace {

Point rotate_cw(Point p, int quarter_turns) {
    int q = ((quarter_turns % 4) + 4) % 4;
    for (int i = 0; i < q; ++i) p = {p.y, -p.x};
    return p;
}

struct Placed {
    // A counter instance rotated by `turns` and translated so its original
    // origin maps to `offset` plus the rotation image.
    int turns = 0;
    Point offset{0, 0};
    Point map(Point p) const {
        Point r = rotate_cw(p, turns);
        return {r.x + offset.x, r.y + offset.y};
    }
};

TileType& find_tile(std::vector<TileType>& tiles, const std::string& name) {
    for (TileType& t : tiles)
        if (t.name == name) return t;
    throw BuildError("missing tile " + name);
}

// Deterministic O(N)-tile square for sizes below the three-counter
// feasibility threshold: a distinct-tile bottom row plus shared column
// tiles carrying their own height index.
GeneratedTas build_comb_square(long long N) {
    detail::Emitter em;
    std::string prev;
    for (long long x = 0; x < N; ++x) {
        std::string name = "sq/b" + std::to_string(x);
        TileType& t = em.tile(name);
        if (x > 0) t.west = glue1(prev);
        if (x + 1 < N) {
            prev = em.fresh_glue("sq");
            t.east = glue1(prev);
        }
        if (N > 1) t.north = glue1("sq/c1");
        em.stamp({x, 0}, name, "sq-base");
    }
    for (long long y = 1; y < N; ++y) {
        std::string name = "sq/c" + std::to_string(y);
        TileType& t = em.tile(name);
        t.south = glue1("sq/c" + std::to_string(y));
        if (y + 1 < N) t.north = glue1("sq/c" + std::to_string(y + 1));
        for (long long x = 0; x < N; ++x) em.stamp({x, y}, name, "sq-cols");
    }
    GeneratedTas out;
    out.expected_terminal = em.terminal();
    for (const auto& [p, t] : out.expected_terminal) out.expected_domain.insert(p);
    out.tile_count = em.tile_count();
    out.provenance = {"comb square (below the three-counter threshold)"};
    out.tas = std::make_unique<Tas>(em.freeze(), Point{0, 0}, "sq/b0");
    return out;
}

}  // namespace

GeneratedTas build_square(long long N, const Rational& delta) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");

    // Counter 1 spans the left wall, counter 2 (rotated 90 degrees
    // clockwise) the top band, counter 3 (rotated 180) the right wall.
    BuildParams p1 = derive_parameters(N, delta, N);
    bool feasible = !p1.comb_regime() && N > p1.K + 1;
    BuildParams p2, p3;
    if (feasible) {
        p2 = derive_parameters(N, delta, N - p1.K);
        feasible = !p2.comb_regime() && p2.e >= 1 && N > p2.K + 1;
    }
    if (feasible) {
        p3 = derive_parameters(N, delta, N - p2.K);
        // The counters' walls must not collide and the backbone row needs
        // room; the rotated seeds sit in the stems, so e2, e3 >= 1.
        feasible = !p3.comb_regime() && p3.e >= 1 && N >= p1.K + p3.K + 1;
    }
    if (!feasible) return build_comb_square(N);

    GeneratedTas c1 = build_counter(p1);
    GeneratedTas c2 = build_counter(p2);
    GeneratedTas c3 = build_counter(p3);

    Placed f1{0, {0, 0}};
    Placed f2{1, {p1.K, N - 1}};                // seed lands at (K1, N-1)
    Placed f3{2, {N - 1, N - 1 - p2.K}};        // seed lands at (N-1, N-K2-1)

    struct Part {
        GeneratedTas* gen;
        const BuildParams* params;
        Placed frame;
        std::string ns;
        TileSet rotated;
    };
    Part parts[3] = {{&c1, &p1, f1, "t1", rotate_tileset(c1.tas->tiles(), 0)},
                     {&c2, &p2, f2, "t2", rotate_tileset(c2.tas->tiles(), 1)},
                     {&c3, &p3, f3, "t3", rotate_tileset(c3.tas->tiles(), 2)}};

    std::vector<TileType> tiles;
    std::map<Point, std::string> terminal;
    SndDeclaration decl;
    std::vector<std::string> provenance;

    for (Part& part : parts) {
        for (const TileType& t : part.rotated.all()) {
            TileType copy = t;
            copy.name = part.ns + "/" + t.name;
            for (Dir d : {Dir::North, Dir::East, Dir::South, Dir::West}) {
                Glue& g = copy.side(d);
                if (!g.is_null()) g = glue1(part.ns + "/" + g.label);
            }
            tiles.push_back(std::move(copy));
        }
        std::string rot_suffix =
            part.frame.turns == 0 ? "" : "@r" + std::to_string(part.frame.turns);
        for (const auto& [p, name] : part.gen->expected_terminal) {
            terminal[part.frame.map(p)] = part.ns + "/" + name + rot_suffix;
        }
        for (std::size_t i = 0; i < part.gen->decl.pocs.size(); ++i) {
            CompetitionSpec c = part.gen->decl.competitions[i];
            CompetitionSpec mapped;
            mapped.start = part.frame.map(c.start);
            mapped.poc = part.frame.map(c.poc);
            for (Point q : c.winning_path) mapped.winning_path.push_back(part.frame.map(q));
            for (Point q : c.losing_path) mapped.losing_path.push_back(part.frame.map(q));
            mapped.winner_tile = part.ns + "/" + c.winner_tile + rot_suffix;
            mapped.rigged = c.rigged;
            decl.pocs.push_back(mapped.poc);
            decl.starts.push_back(mapped.start);
            decl.winner[mapped.poc] = mapped.winner_tile;
            decl.competitions.push_back(std::move(mapped));
        }
        provenance.push_back(part.ns + ": counter n=" + std::to_string(part.params->n) +
                             " K=" + std::to_string(part.params->K));
    }

    auto last_tile_name = [&](const Part& part) {
        Point last_local{part.params->K - 1, part.params->n - 1};
        return terminal.at(part.frame.map(last_local));
    };
    auto seed_tile_name = [&](const Part& part) {
        Point seed_local = part.params->e == 0 ? Point{2, 0} : Point{0, 0};
        return terminal.at(part.frame.map(seed_local));
    };

    // Concatenation: each counter's final tile gains a glue feeding the next
    // counter's (former) seed tile.
    find_tile(tiles, last_tile_name(parts[0])).east = glue1("sq/t1_to_t2");
    find_tile(tiles, seed_tile_name(parts[1])).west = glue1("sq/t1_to_t2");
    find_tile(tiles, last_tile_name(parts[1])).south = glue1("sq/t2_to_t3");
    find_tile(tiles, seed_tile_name(parts[2])).north = glue1("sq/t2_to_t3");

    // Interior fill, seeded by the third counter's completion: a backbone
    // row growing west along y=0 (tile types A head, B body), teeth climbing
    // from every backbone cell (C base, D body) until the completed walls
    // block them, and notch teeth (E) sprouting from the third counter's
    // initialization row to fill the pocket beside its stem.
    find_tile(tiles, last_tile_name(parts[2])).west = glue1("sq/backbone");
    TileType fa{"fill/A", {}, {}, {}, {}};
    fa.east = glue1("sq/backbone");
    fa.west = glue1("sq/backbone_body");
    fa.north = glue1("sq/tooth_base");
    TileType fb{"fill/B", {}, {}, {}, {}};
    fb.east = glue1("sq/backbone_body");
    fb.west = glue1("sq/backbone_body");
    fb.north = glue1("sq/tooth_base");
    TileType fc{"fill/C", {}, {}, {}, {}};
    fc.south = glue1("sq/tooth_base");
    fc.north = glue1("sq/tooth");
    TileType fd{"fill/D", {}, {}, {}, {}};
    fd.south = glue1("sq/tooth");
    fd.north = glue1("sq/tooth");
    TileType fe{"fill/E", {}, {}, {}, {}};
    fe.south = glue1("sq/notch_tooth");
    fe.north = glue1("sq/notch_tooth");
    tiles.push_back(fa);
    tiles.push_back(fb);
    tiles.push_back(fc);
    tiles.push_back(fd);
    tiles.push_back(fe);
    provenance.push_back("fill: 5 interior tile types A-E");

    // The notch glue goes on every third-counter tile type occupying its
    // initialization row with a free face toward the stem pocket.
    {
        const Part& t3 = parts[2];
        std::set<std::string> init_row_types;
        for (const auto& [p, name] : t3.gen->expected_terminal)
            if (p.y == t3.params->e && t3.params->e > 0)
                init_row_types.insert(terminal.at(t3.frame.map(p)));
        for (const std::string& name : init_row_types) {
            TileType& t = find_tile(tiles, name);
            if (t.north.is_null()) t.north = glue1("sq/notch_tooth");
        }
    }

    // Expected fill region = square minus the three counters: the backbone
    // along y = 0, teeth above it, and notch teeth right of x = N - K3.
    std::set<Point> square;
    for (long long x = 0; x < N; ++x)
        for (long long y = 0; y < N; ++y) square.insert({x, y});
    std::vector<Point> fill_cells;
    for (Point p : square)
        if (!terminal.count(p)) fill_cells.push_back(p);
    for (Point p : fill_cells) {
        std::string name;
        if (p.x >= N - p3.K)
            name = "fill/E";
        else if (p.y == 0)
            name = p.x == N - p3.K - 1 ? "fill/A" : "fill/B";
        else if (p.y == 1)
            name = "fill/C";
        else
            name = "fill/D";
        terminal[p] = name;
    }
    if (terminal.size() != square.size()) throw BuildError("square interior fill mismatch");

    TileSet set;
    for (TileType& t : tiles) set.add(std::move(t));
    GeneratedTas out;
    out.decl = std::move(decl);
    out.expected_terminal = std::move(terminal);
    out.expected_domain = std::move(square);
    out.tile_count = set.size();
    out.provenance = std::move(provenance);
    Point seed_global = parts[0].frame.map(p1.e == 0 ? Point{2, 0} : Point{0, 0});
    out.tas = std::make_unique<Tas>(std::move(set), seed_global,
                                    out.expected_terminal.at(seed_global));
    return out;
}

}  // namespace snd
