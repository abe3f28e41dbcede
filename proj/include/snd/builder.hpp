#ifndef SND_BUILDER_HPP
#define SND_BUILDER_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "snd/rational.hpp"
#include "snd/tas.hpp"
#include "snd/verifier.hpp"

namespace snd {

// Derived zigzag-counter parameters. For m >= 1 the counter runs through the
// values s, s+1, ..., s+m-1 and stops after copying the all-zeros overflow.
struct BuildParams {
    long long N = 1;
    Rational delta;
    long long n = 1;
    long long h = 0;
    long long m = 0;
    long long e = 0;
    long long s = 0;
    long long k = 0;
    long long K = 0;

    bool comb_regime() const { return n < 13 || m < 1; }
};

// h = ceil(log2(N^2 / delta)) + 5, computed exactly on rationals.
BuildParams derive_parameters(long long N, const Rational& delta, long long n);

struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratedTas {
    std::unique_ptr<Tas> tas;
    SndDeclaration decl;  // empty (r = 0) for deterministic builds
    std::set<Point> expected_domain;
    std::map<Point, std::string> expected_terminal;  // the w-correct assembly
    std::size_t tile_count = 0;
    std::vector<std::string> provenance;  // gadget instance log
    bool deterministic() const { return decl.pocs.empty(); }
};

// The P-shaped counter of the main lemma: L_e stem plus a K x (n-e) zigzag
// counter rectangle, strictly self-assembling with probability >= 1 - delta.
// Falls back to a deterministic comb when n < 13 or m = 0.
GeneratedTas build_counter(const BuildParams& params);

// N x N square from three counters (the second and third rotated clockwise
// by 90 and 180 degrees) plus five interior filler tile types.
GeneratedTas build_square(long long N, const Rational& delta);

// Clockwise quarter-turn rotations of a tile set: glue sides cycle
// N->E->S->W->N per turn; names get a rotation suffix when turns != 0.
TileSet rotate_tileset(const TileSet& ts, int quarter_turns);

// Worked-example fixtures.
GeneratedTas build_fixture(const std::string& name);           // fig1, fig2, snd_demo, conclusion_gadget
GeneratedTas build_race_fixture(long long l_win, long long l_lose);

}  // namespace snd

#endif
