#include "snd/builder.hpp"

#include "builder_internal.hpp"

namespace snd {

namespace detail {

std::vector<std::string> lay_chain(Emitter& em, const std::string& prefix,
                                   const std::vector<Point>& cells, Point in_from,
                                   const std::string& in_glue) {
    std::vector<std::string> names;
    names.reserve(cells.size());
    std::string prev_glue;
    Point prev = in_from;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string name = prefix + "/" + std::to_string(i);
        TileType& t = em.tile(name);
        if (i == 0) {
            if (!(in_from == cells.front()) && !in_glue.empty())
                t.side(dir_to(cells[i], prev)) = glue1(in_glue);
        } else {
            t.side(dir_to(cells[i], prev)) = glue1(prev_glue);
        }
        if (i + 1 < cells.size()) {
            // Tile i exposes a fresh glue toward cell i+1; iteration i+1
            // places the matching glue on the facing side.
            prev_glue = em.fresh_glue(prefix);
            t.side(dir_to(cells[i], cells[i + 1])) = glue1(prev_glue);
        }
        names.push_back(name);
        prev = cells[i];
    }
    return names;
}

}  // namespace detail

namespace {

// Smallest t >= 0 with 2^t >= value (value > 0), exact.
long long ceil_log2(const Rational& value) {
    if (value <= 0) throw std::invalid_argument("ceil_log2 of nonpositive value");
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    long long t = 0;
    BigInt p2 = 1;
    while (p2 * den < num) {
        p2 <<= 1;
        ++t;
    }
    return t;
}

}  // namespace

BuildParams derive_parameters(long long N, const Rational& delta, long long n) {
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    if (delta <= 0 || delta >= 1) throw std::invalid_argument("delta must lie in (0,1)");
    if (n < 1 || n > N) throw std::invalid_argument("n must satisfy 1 <= n <= N");
    BuildParams p;
    p.N = N;
    p.delta = delta;
    p.n = n;
    // h = ceil(2 log2 N + log2(1/delta)) + 5 = ceil(log2(N^2/delta)) + 5.
    p.h = ceil_log2(Rational(BigInt(N) * N) / delta) + 5;
    if (n < 13) {
        // Too small for even one increment and one copy row; the whole
        // domain is the L-shaped stem.
        p.e = n;
        p.m = 0;
        p.k = 0;
        p.K = 4;
        return p;
    }
    p.m = (n - 1) / (2 * p.h);
    p.e = (n - 1) % (2 * p.h);
    if (p.m >= 1) {
        long long k = 0;
        for (long long v = p.m; v > 0; v >>= 1) ++k;
        p.k = k;
        p.K = 12 * k + 4;
        p.s = (1LL << k) - p.m;
        if (p.s < 1 || p.s + p.m != (1LL << k))
            throw BuildError("inconsistent starting value derivation");
    } else {
        p.k = 0;
        p.K = 4;
    }
    return p;
}

TileSet rotate_tileset(const TileSet& ts, int quarter_turns) {
    int q = ((quarter_turns % 4) + 4) % 4;
    TileSet out;
    for (const TileType& t : ts.all()) {
        TileType r = t;
        for (int i = 0; i < q; ++i) {
            // Clockwise: the north side becomes the east side.
            TileType next = r;
            next.east = r.north;
            next.south = r.east;
            next.west = r.south;
            next.north = r.west;
            r = next;
        }
        if (q != 0) r.name = t.name + "@r" + std::to_string(q);
        out.add(r);
    }
    return out;
}

}  // namespace snd
