#include <functional>

#include "builder_internal.hpp"
#include "snd/builder.hpp"

namespace snd {

using detail::Emitter;

namespace {

// ---------------------------------------------------------------------------
// Slot-level gadget shapes, designed in the frame of a leftward-assembling
// increment row and mirrored for copy rows. A slot is 6 columns wide and h
// rows tall; local (0,0) is the slot's bottom-left cell.
//
// Read gadget: start tile at (5,0); the guess-0 path runs west along the
// bottom row through the two bit-bump cells (4,0),(3,0) to the POC at (2,0);
// the guess-1 path snakes up and down columns 5,4,3,2 within rows 1..h-3 and
// enters the POC from the north. Path lengths are 4 and 4h-10. A bump
// written by the row below occupies (4,0),(3,0) and blocks the short path,
// rigging the competition toward the 1 guess.
//
// Write gadget: enters at (1,0) from the POC tile, climbs column 1, sweeps
// rows h-2 and h-1 across columns 2..5, threads the bump over (2,h),(1,h)
// when writing a 1, and exits west along the bottom via column 0. The bump
// cells sit in the next band's bottom row, exactly the short-path interior
// of the read gadget above this slot.

struct SlotFrame {
    Point origin;
    bool flip = false;
    Point map(Point local) const {
        return {origin.x + (flip ? 5 - local.x : local.x), origin.y + local.y};
    }
    Dir map(Dir d) const {
        if (!flip) return d;
        if (d == Dir::East) return Dir::West;
        if (d == Dir::West) return Dir::East;
        return d;
    }
};

struct RiserFrame {
    Point origin;
    bool flip = false;
    Point map(Point local) const {
        return {origin.x + (flip ? 1 - local.x : local.x), origin.y + local.y};
    }
    Dir map(Dir d) const {
        if (!flip) return d;
        if (d == Dir::East) return Dir::West;
        if (d == Dir::West) return Dir::East;
        return d;
    }
};

std::vector<Point> read_long_cells(long long h) {
    std::vector<Point> cells;
    for (long long r = 1; r <= h - 3; ++r) cells.push_back({5, r});
    for (long long r = h - 3; r >= 1; --r) cells.push_back({4, r});
    for (long long r = 1; r <= h - 3; ++r) cells.push_back({3, r});
    for (long long r = h - 3; r >= 1; --r) cells.push_back({2, r});
    return cells;
}

std::vector<Point> write_cells(long long h, bool bump) {
    std::vector<Point> cells{{1, 0}};
    for (long long r = 1; r <= h - 2; ++r) cells.push_back({1, r});
    for (long long c = 2; c <= 5; ++c) cells.push_back({c, h - 2});
    for (long long c = 5; c >= 2; --c) cells.push_back({c, h - 1});
    if (bump) {
        cells.push_back({2, h});
        cells.push_back({1, h});
    }
    cells.push_back({1, h - 1});
    cells.push_back({0, h - 1});
    for (long long r = h - 2; r >= 0; --r) cells.push_back({0, r});
    return cells;
}

template <typename FrameT>
std::vector<std::string> lay_oriented_chain(Emitter& em, const FrameT& frame,
                                            const std::string& prefix,
                                            const std::vector<Point>& cells, Dir in_side,
                                            const std::string& in_glue) {
    std::vector<std::string> names;
    std::string prev_glue;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::string name = prefix + "/" + std::to_string(i);
        TileType& t = em.tile(name);
        if (i == 0) {
            if (!in_glue.empty()) t.side(frame.map(in_side)) = glue1(in_glue);
        } else {
            t.side(frame.map(dir_to(cells[i], cells[i - 1]))) = glue1(prev_glue);
        }
        if (i + 1 < cells.size()) {
            prev_glue = em.fresh_glue(prefix);
            t.side(frame.map(dir_to(cells[i], cells[i + 1]))) = glue1(prev_glue);
        }
        names.push_back(name);
    }
    return names;
}

struct ReadInstance {
    std::string key;
    bool flip = false;
    std::string x_name, s1_name, s2_name, poc0_name, poc1_name;
    std::vector<std::string> long_names;
};

struct WriteInstance {
    std::string key;
    bool flip = false;
    bool bump = false;
    std::vector<Point> cells;
    std::vector<std::string> names;
};

struct RiserInstance {
    std::string key;
    bool flip = false;
    std::vector<Point> cells;
    std::vector<std::string> names;
};

class CounterBuilder {
  public:
    explicit CounterBuilder(const BuildParams& params) : P(params) {}

    GeneratedTas build() {
        if (P.comb_regime()) return build_comb();
        h = P.h;
        k = P.k;
        K = P.K;

        precreate_instances();
        emit_seed_and_init();

        std::vector<int> bits = init_row_bits();
        for (long long j = 0; j < P.m; ++j) {
            bool done = false;
            bits = run_inc_row(j, bits, &done);
            if (done != (j == P.m - 1))
                throw BuildError("counter overflow did not line up with m");
            bits = run_copy_row(j, bits, done);
        }
        return finish();
    }

  private:
    BuildParams P;
    Emitter em;
    long long h = 0, k = 0, K = 0;
    SndDeclaration decl;
    std::map<std::string, ReadInstance> reads;
    std::map<std::string, WriteInstance> writes;
    std::map<std::string, RiserInstance> risers;

    long long band_y(long long j, bool copy) const {
        return P.e + 1 + (2 * j + (copy ? 1 : 0)) * h;
    }

    static std::string inc_glue(const std::string& payload) {
        return "inc/⟨" + payload + "⟩";
    }
    static std::string copy_glue(const std::string& payload) {
        return "copy/⟨" + payload + "⟩";
    }

    std::vector<int> init_row_bits() const {
        std::vector<int> bits(2 * k, 0);
        bits[0] = 1;  // b'_k
        for (long long t = 0; t < k; ++t)
            bits[2 * t + 1] = static_cast<int>((P.s >> (k - t - 1)) & 1);
        return bits;
    }

    // -- instance creation ---------------------------------------------------

    const ReadInstance& make_read(const std::string& key, bool flip, const std::string& in,
                                  const std::string& out0, const std::string& out1) {
        auto it = reads.find(key);
        if (it != reads.end()) return it->second;
        ReadInstance inst;
        inst.key = key;
        inst.flip = flip;
        SlotFrame f{{0, 0}, flip};

        std::string gs1 = em.fresh_glue(key), gs2 = em.fresh_glue(key), gs3 = em.fresh_glue(key);
        std::string gl1 = em.fresh_glue(key);
        inst.x_name = key + "/x";
        TileType& x = em.tile(inst.x_name);
        x.side(f.map(Dir::East)) = glue1(in);
        x.side(f.map(Dir::West)) = glue1(gs1);
        x.side(Dir::North) = glue1(gl1);

        inst.s1_name = key + "/s1";
        inst.s2_name = key + "/s2";
        em.tile(inst.s1_name).side(f.map(Dir::East)) = glue1(gs1);
        em.tile(inst.s1_name).side(f.map(Dir::West)) = glue1(gs2);
        em.tile(inst.s2_name).side(f.map(Dir::East)) = glue1(gs2);
        em.tile(inst.s2_name).side(f.map(Dir::West)) = glue1(gs3);

        inst.poc0_name = key + "/poc0";
        em.tile(inst.poc0_name).side(f.map(Dir::East)) = glue1(gs3);
        em.tile(inst.poc0_name).side(f.map(Dir::West)) = glue1(out0);

        inst.long_names = lay_oriented_chain(em, f, key + "/L", read_long_cells(h), Dir::South, gl1);
        std::string gln = em.fresh_glue(key);
        em.tile(inst.long_names.back()).side(Dir::South) = glue1(gln);
        inst.poc1_name = key + "/poc1";
        em.tile(inst.poc1_name).side(Dir::North) = glue1(gln);
        em.tile(inst.poc1_name).side(f.map(Dir::West)) = glue1(out1);

        return reads.emplace(key, std::move(inst)).first->second;
    }

    const WriteInstance& make_write(const std::string& key, bool flip, bool bump, bool row_end,
                                    const std::string& in, const std::string& out) {
        auto it = writes.find(key);
        if (it != writes.end()) return it->second;
        WriteInstance inst;
        inst.key = key;
        inst.flip = flip;
        inst.bump = bump;
        SlotFrame f{{0, 0}, flip};
        inst.cells = write_cells(h, bump);
        inst.names = lay_oriented_chain(em, f, key, inst.cells, Dir::East, in);
        if (row_end) {
            // Output faces west at the top corner; the column-0 descent
            // remains as a dead-end tail that fills the margin column.
            for (std::size_t i = 0; i < inst.cells.size(); ++i)
                if (inst.cells[i] == Point{0, h - 1}) {
                    em.tile(inst.names[i]).side(f.map(Dir::West)) = glue1(out);
                    break;
                }
        } else {
            em.tile(inst.names.back()).side(f.map(Dir::West)) = glue1(out);
        }
        return writes.emplace(key, std::move(inst)).first->second;
    }

    // Margin riser: input at the band's top margin cell, probe descent into
    // the previous band's notch (the error-containment hook), a climb
    // through the outer margin column and a return descent delivering into
    // the next row. `last_notch` stretches the climb one row to also cover
    // the final band's notch.
    const RiserInstance& make_riser(const std::string& key, bool flip, bool last_notch,
                                    const std::string& in, const std::string& out) {
        auto it = risers.find(key);
        if (it != risers.end()) return it->second;
        RiserInstance inst;
        inst.key = key;
        inst.flip = flip;
        RiserFrame f{{0, 0}, flip};
        std::vector<Point>& cells = inst.cells;
        cells.push_back({1, h - 1});
        for (long long r = h - 2; r >= 0; --r) cells.push_back({1, r});
        cells.push_back({1, -1});
        cells.push_back({0, -1});
        long long top = last_notch ? 2 * h - 1 : 2 * h - 2;
        for (long long r = 0; r <= top; ++r) cells.push_back({0, r});
        cells.push_back({1, top});
        for (long long r = top - 1; r >= h; --r) cells.push_back({1, r});
        inst.names = lay_oriented_chain(em, f, key, cells, Dir::East, in);
        em.tile(inst.names.back()).side(f.map(Dir::East)) = glue1(out);
        return risers.emplace(key, std::move(inst)).first->second;
    }

    // Terminal gadget: probe descent, then a final climb whose top tile is
    // the unique type at (K-1, n-1) with no outward glues and no output.
    const RiserInstance& make_last(const std::string& in) {
        const std::string key = "last";
        auto it = risers.find(key);
        if (it != risers.end()) return it->second;
        RiserInstance inst;
        inst.key = key;
        inst.flip = true;
        RiserFrame f{{0, 0}, true};
        std::vector<Point>& cells = inst.cells;
        cells.push_back({1, h - 1});
        for (long long r = h - 2; r >= 0; --r) cells.push_back({1, r});
        cells.push_back({1, -1});
        cells.push_back({0, -1});
        for (long long r = 0; r <= h - 1; ++r) cells.push_back({0, r});
        inst.names = lay_oriented_chain(em, f, key, cells, Dir::East, in);
        return risers.emplace(key, std::move(inst)).first->second;
    }

    // The full gadget table of the construction, independent of which
    // entries the correct assembly happens to use, so that misread branches
    // continue exactly as designed.
    void precreate_instances() {
        auto S = [](int v) { return std::to_string(v); };
        make_read("inc_read/lsv", false, inc_glue("least_significant_value_bit, carry=1"),
                  inc_glue("least_significant_value_bit=1, carry=0"),
                  inc_glue("least_significant_value_bit=0, carry=1"));
        make_write("inc_write/lsv_b0", false, false, false,
                   inc_glue("least_significant_value_bit=0, carry=1"),
                   k == 1 ? inc_glue("least_significant_indicator_bit_k1, carry=1")
                          : inc_glue("least_significant_indicator_bit, carry=1"));
        make_write("inc_write/lsv_b1", false, true, false,
                   inc_glue("least_significant_value_bit=1, carry=0"),
                   k == 1 ? inc_glue("least_significant_indicator_bit_k1, carry=0")
                          : inc_glue("least_significant_indicator_bit, carry=0"));
        if (k == 1) {
            for (int c : {0, 1}) {
                make_read("inc_read/lsi_k1_c" + S(c), false,
                          inc_glue("least_significant_indicator_bit_k1, carry=" + S(c)),
                          inc_glue("most_significant_indicator_bit_k1=1, carry=" + S(c)),
                          inc_glue("most_significant_indicator_bit_k1=1, carry=" + S(c)));
                make_write("inc_write/msi_k1_c" + S(c), false, true, true,
                           inc_glue("most_significant_indicator_bit_k1=1, carry=" + S(c)),
                           c ? "inc/inc_to_copy_done" : "inc/inc_to_copy");
            }
        } else {
            for (int c : {0, 1}) {
                make_read("inc_read/lsi_c" + S(c), false,
                          inc_glue("least_significant_indicator_bit, carry=" + S(c)),
                          inc_glue("non_most_significant_indicator_bit=1, carry=" + S(c)),
                          inc_glue("non_most_significant_indicator_bit=1, carry=" + S(c)));
                make_read("inc_read/nlsv_c" + S(c), false,
                          inc_glue("non_least_significant_value_bit, carry=" + S(c)),
                          inc_glue("non_least_significant_value_bit=" + S(c) + ", carry=0"),
                          inc_glue("non_least_significant_value_bit=" + S(1 - c) +
                                   ", carry=" + S(c)));
                make_read("inc_read/nlsi_c" + S(c), false,
                          inc_glue("non_least_significant_indicator_bit, carry=" + S(c)),
                          inc_glue("non_most_significant_indicator_bit=0, carry=" + S(c)),
                          inc_glue("most_significant_indicator_bit=0, carry=" + S(c)));
                for (int b : {0, 1})
                    make_write("inc_write/nmsi_b" + S(b) + "_c" + S(c), false, b == 1, false,
                               inc_glue("non_most_significant_indicator_bit=" + S(b) +
                                        ", carry=" + S(c)),
                               inc_glue("non_least_significant_value_bit, carry=" + S(c)));
                make_write("inc_write/msi_c" + S(c), false, false, true,
                           inc_glue("most_significant_indicator_bit=0, carry=" + S(c)),
                           c ? "inc/inc_to_copy_done" : "inc/inc_to_copy");
            }
            for (auto [b, c] : {std::pair<int, int>{0, 0}, {0, 1}, {1, 0}})
                make_write("inc_write/nlsv_b" + S(b) + "_c" + S(c), false, b == 1, false,
                           inc_glue("non_least_significant_value_bit=" + S(b) +
                                    ", carry=" + S(c)),
                           inc_glue("non_least_significant_indicator_bit, carry=" + S(c)));
        }
        make_riser("inc_to_copy", false, false, "inc/inc_to_copy",
                   copy_glue("most_significant_indicator_bit, done=0"));
        make_riser("inc_to_copy_last", false, true, "inc/inc_to_copy_done",
                   copy_glue("most_significant_indicator_bit, done=1"));

        for (int d : {0, 1}) {
            std::string D = S(d);
            if (k == 1) {
                make_read("copy_read/msi_d" + D, true,
                          copy_glue("most_significant_indicator_bit, done=" + D),
                          copy_glue("least_significant_indicator_bit_k1=" + S(1 - d) +
                                    ", done=" + D),
                          copy_glue("least_significant_indicator_bit_k1=" + S(1 - d) +
                                    ", done=" + D));
                make_write("copy_write/lsi_k1_b" + S(1 - d) + "_d" + D, true, d == 0, false,
                           copy_glue("least_significant_indicator_bit_k1=" + S(1 - d) +
                                     ", done=" + D),
                           copy_glue("least_significant_value_bit, done=" + D));
            } else {
                make_read("copy_read/msi_d" + D, true,
                          copy_glue("most_significant_indicator_bit, done=" + D),
                          copy_glue("non_least_significant_indicator_bit=" + S(1 - d) +
                                    ", done=" + D),
                          copy_glue("non_least_significant_indicator_bit=" + S(1 - d) +
                                    ", done=" + D));
                make_read("copy_read/nlsv_d" + D, true,
                          copy_glue("non_least_significant_value_bit, done=" + D),
                          copy_glue("non_least_significant_value_bit=0, done=" + D),
                          copy_glue("non_least_significant_value_bit=" + S(d ? 0 : 1) +
                                    ", done=" + D));
                make_read("copy_read/nmsi_d" + D, true,
                          copy_glue("non_most_significant_indicator_bit, done=" + D),
                          copy_glue("non_most_significant_indicator_bit=0, done=" + D),
                          copy_glue("least_significant_indicator_bit=0, done=" + D));
                make_write("copy_write/lsi_b0_d" + D, true, false, false,
                           copy_glue("least_significant_indicator_bit=0, done=" + D),
                           copy_glue("least_significant_value_bit, done=" + D));
            }
            make_read("copy_read/lsv_d" + D, true,
                      copy_glue("least_significant_value_bit, done=" + D),
                      copy_glue("least_significant_value_bit=0, done=" + D),
                      copy_glue("least_significant_value_bit=" + S(d ? 0 : 1) + ", done=" + D));
        }
        if (k >= 2) {
            for (auto [b, d] : {std::pair<int, int>{0, 0}, {1, 0}, {0, 1}}) {
                make_write("copy_write/nlsi_b" + S(b) + "_d" + S(d), true, b == 1, false,
                           copy_glue("non_least_significant_indicator_bit=" + S(b) +
                                     ", done=" + S(d)),
                           copy_glue("non_least_significant_value_bit, done=" + S(d)));
                make_write("copy_write/nlsv_b" + S(b) + "_d" + S(d), true, b == 1, false,
                           copy_glue("non_least_significant_value_bit=" + S(b) +
                                     ", done=" + S(d)),
                           copy_glue("non_most_significant_indicator_bit, done=" + S(d)));
            }
        }
        make_write("copy_write/lsv_b0_d0", true, false, true,
                   copy_glue("least_significant_value_bit=0, done=0"), "copy/copy_to_inc");
        make_write("copy_write/lsv_b1_d0", true, true, true,
                   copy_glue("least_significant_value_bit=1, done=0"), "copy/copy_to_inc");
        make_write("copy_write/lsv_b0_d1", true, false, true,
                   copy_glue("least_significant_value_bit=0, done=1"), "copy/copy_to_last");
        make_riser("copy_to_inc", true, false, "copy/copy_to_inc",
                   inc_glue("least_significant_value_bit, carry=1"));
        make_last("copy/copy_to_last");

        for (const auto& [key, inst] : reads) em.provenance.push_back("gadget " + key);
        for (const auto& [key, inst] : writes) em.provenance.push_back("gadget " + key);
        for (const auto& [key, inst] : risers) em.provenance.push_back("gadget " + key);
    }

    const ReadInstance& read_of(const std::string& key) const {
        auto it = reads.find(key);
        if (it == reads.end()) throw BuildError("missing read instance " + key);
        return it->second;
    }
    const WriteInstance& write_of(const std::string& key) const {
        auto it = writes.find(key);
        if (it == writes.end()) throw BuildError("missing write instance " + key);
        return it->second;
    }

    // -- stamping ------------------------------------------------------------

    void stamp_read(const ReadInstance& inst, Point anchor, int bit) {
        SlotFrame f{anchor, inst.flip};
        em.stamp(f.map({5, 0}), inst.x_name, inst.key);
        std::vector<Point> lc = read_long_cells(h);
        for (std::size_t i = 0; i < lc.size(); ++i)
            em.stamp(f.map(lc[i]), inst.long_names[i], inst.key);
        if (bit == 0) {
            em.stamp(f.map({4, 0}), inst.s1_name, inst.key);
            em.stamp(f.map({3, 0}), inst.s2_name, inst.key);
            em.stamp(f.map({2, 0}), inst.poc0_name, inst.key);
        } else {
            em.stamp(f.map({2, 0}), inst.poc1_name, inst.key);
        }
    }

    void stamp_write(const WriteInstance& inst, Point anchor) {
        SlotFrame f{anchor, inst.flip};
        for (std::size_t i = 0; i < inst.cells.size(); ++i)
            em.stamp(f.map(inst.cells[i]), inst.names[i], inst.key);
    }

    void stamp_riser(const RiserInstance& inst, Point anchor) {
        RiserFrame f{anchor, inst.flip};
        for (std::size_t i = 0; i < inst.cells.size(); ++i)
            em.stamp(f.map(inst.cells[i]), inst.names[i], inst.key);
    }

    void declare_poc(const ReadInstance& inst, Point anchor, int bit) {
        SlotFrame f{anchor, inst.flip};
        CompetitionSpec c;
        c.start = f.map({5, 0});
        c.poc = f.map({2, 0});
        c.winning_path = {c.start, f.map({4, 0}), f.map({3, 0}), c.poc};
        c.losing_path.push_back(c.start);
        for (Point p : read_long_cells(h)) c.losing_path.push_back(f.map(p));
        c.losing_path.push_back(c.poc);
        if (bit == 1) {
            std::swap(c.winning_path, c.losing_path);
            c.rigged = true;
            c.winner_tile = inst.poc1_name;
        } else {
            c.winner_tile = inst.poc0_name;
        }
        decl.pocs.push_back(c.poc);
        decl.starts.push_back(c.start);
        decl.winner[c.poc] = c.winner_tile;
        decl.competitions.push_back(c);
    }

    // -- rows ------------------------------------------------------------------

    std::vector<int> run_inc_row(long long j, const std::vector<int>& below, bool* done) {
        long long y0 = band_y(j, false);
        std::vector<int> written(2 * k, 0);
        int carry = 1;
        for (long long i = 2 * k - 1; i >= 0; --i) {
            Point anchor{2 + 6 * i, y0};
            bool value_slot = (i % 2) == 1;
            int bit = below[i];
            std::string rkey, wkey;
            int wbit = 0;
            if (value_slot && i == 2 * k - 1) {
                rkey = "inc_read/lsv";
                wbit = bit ^ carry;
                carry = bit & carry;
                wkey = "inc_write/lsv_b" + std::to_string(wbit);
            } else if (value_slot) {
                rkey = "inc_read/nlsv_c" + std::to_string(carry);
                wbit = bit ^ carry;
                carry = bit & carry;
                wkey = "inc_write/nlsv_b" + std::to_string(wbit) + "_c" + std::to_string(carry);
            } else if (k == 1) {
                rkey = "inc_read/lsi_k1_c" + std::to_string(carry);
                wbit = 1;
                wkey = "inc_write/msi_k1_c" + std::to_string(carry);
            } else if (i == 2 * k - 2) {
                rkey = "inc_read/lsi_c" + std::to_string(carry);
                wbit = 1;
                wkey = "inc_write/nmsi_b1_c" + std::to_string(carry);
            } else if (i == 0) {
                rkey = "inc_read/nlsi_c" + std::to_string(carry);
                wbit = 0;
                wkey = "inc_write/msi_c" + std::to_string(carry);
            } else {
                rkey = "inc_read/nlsi_c" + std::to_string(carry);
                wbit = 0;
                wkey = "inc_write/nmsi_b0_c" + std::to_string(carry);
            }
            const ReadInstance& r = read_of(rkey);
            stamp_read(r, anchor, bit);
            declare_poc(r, anchor, bit);
            stamp_write(write_of(wkey), anchor);
            written[i] = wbit;
        }
        *done = carry == 1;
        em.provenance.push_back("inc row " + std::to_string(j) + " at y=" + std::to_string(y0));
        stamp_riser(risers.at(*done ? "inc_to_copy_last" : "inc_to_copy"), {0, y0});
        return written;
    }

    std::vector<int> run_copy_row(long long j, const std::vector<int>& below, bool done) {
        long long y0 = band_y(j, true);
        std::string d = std::to_string(done ? 1 : 0);
        std::vector<int> written(2 * k, 0);
        for (long long i = 0; i < 2 * k; ++i) {
            Point anchor{2 + 6 * i, y0};
            bool value_slot = (i % 2) == 1;
            int bit = below[i];
            std::string rkey, wkey;
            int wbit = 0;
            if (i == 0) {
                rkey = "copy_read/msi_d" + d;
                wbit = done ? 0 : 1;
                wkey = k == 1 ? "copy_write/lsi_k1_b" + std::to_string(wbit) + "_d" + d
                              : "copy_write/nlsi_b" + std::to_string(wbit) + "_d" + d;
            } else if (value_slot && i == 2 * k - 1) {
                rkey = "copy_read/lsv_d" + d;
                wbit = done ? 0 : bit;
                wkey = "copy_write/lsv_b" + std::to_string(wbit) + "_d" + d;
            } else if (value_slot) {
                rkey = "copy_read/nlsv_d" + d;
                wbit = done ? 0 : bit;
                wkey = "copy_write/nlsv_b" + std::to_string(wbit) + "_d" + d;
            } else {
                rkey = "copy_read/nmsi_d" + d;
                wbit = 0;
                wkey = bit == 1 ? "copy_write/lsi_b0_d" + d : "copy_write/nmsi_b0_d" + d;
            }
            const ReadInstance& r = read_of(rkey);
            stamp_read(r, anchor, bit);
            declare_poc(r, anchor, bit);
            stamp_write(write_of(wkey), anchor);
            written[i] = wbit;
        }
        em.provenance.push_back("copy row " + std::to_string(j) + (done ? " (final)" : "") +
                                " at y=" + std::to_string(y0));
        stamp_riser(risers.at(done ? "last" : "copy_to_inc"), {2 + 6 * (2 * k), y0});
        return written;
    }

    // -- seed, stem and the initialization row --------------------------------

    void emit_seed_and_init() {
        long long e = P.e;
        Dir init_in_side;
        Point init_in_cell;
        if (e == 0) {
            em.tile("seed/origin").east = glue1("init");
            em.stamp({2, 0}, "seed/origin", "seed");
            init_in_side = Dir::West;
            init_in_cell = {3, 0};
        } else {
            std::vector<Point> cells;
            for (long long y = 0; y < e; ++y) cells.push_back({0, y});
            cells.push_back({1, e - 1});
            cells.push_back({2, e - 1});
            auto names = detail::lay_chain(em, "seed", cells, cells.front(), "");
            for (std::size_t i = 0; i < cells.size(); ++i) em.stamp(cells[i], names[i], "seed");
            em.tile(names.back()).north = glue1("init");
            init_in_side = Dir::South;
            init_in_cell = {2, e};
        }
        em.provenance.push_back("seed gadget (e=" + std::to_string(e) + ")");

        std::vector<int> bits = init_row_bits();
        Point in_cell = init_in_cell;
        Dir in_side = init_in_side;
        std::string in_glue = "init";
        for (long long i = 0; i < 2 * k; ++i) {
            long long x0 = 2 + 6 * i;
            bool value_slot = (i % 2) == 1;
            long long bitpos = value_slot ? k - (i - 1) / 2 : k - i / 2;
            int b = bits[i];
            std::string gname;
            if (i == 0)
                gname = "init/left";
            else if (i == 2 * k - 1)
                gname = "init/right_" + std::to_string(b);
            else
                gname = "init/middle" + std::to_string(i) + "_" + std::to_string(b);

            std::vector<Point> cells;
            for (long long x = in_cell.x; x <= x0 + 2; ++x) cells.push_back({x, P.e});
            cells.push_back({x0 + 3, P.e});
            if (b == 1) {
                cells.push_back({x0 + 3, P.e + 1});
                cells.push_back({x0 + 4, P.e + 1});
            }
            cells.push_back({x0 + 4, P.e});
            cells.push_back({x0 + 5, P.e});
            std::string out;
            if (i == 2 * k - 1) {
                cells.push_back({K - 2, P.e});
                cells.push_back({K - 1, P.e});
                for (long long r = 1; r <= h - 1; ++r) cells.push_back({K - 1, P.e + r});
                cells.push_back({K - 2, P.e + h - 1});
                for (long long r = h - 2; r >= 1; --r) cells.push_back({K - 2, P.e + r});
                out = inc_glue("least_significant_value_bit, carry=1");
            } else if (value_slot) {
                out = "init/indicator_bit_" + std::to_string(bitpos - 1);
            } else {
                out = "init/value_bit_" + std::to_string(bitpos);
            }

            std::vector<std::string> names;
            std::string prev_glue;
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                std::string name = gname + "/" + std::to_string(ci);
                TileType& t = em.tile(name);
                if (ci == 0) {
                    t.side(in_side) = glue1(in_glue);
                } else {
                    t.side(dir_to(cells[ci], cells[ci - 1])) = glue1(prev_glue);
                }
                if (ci + 1 < cells.size()) {
                    prev_glue = em.fresh_glue(gname);
                    t.side(dir_to(cells[ci], cells[ci + 1])) = glue1(prev_glue);
                }
                em.stamp(cells[ci], name, gname);
                names.push_back(name);
            }
            em.tile(names.back()).side(i == 2 * k - 1 ? Dir::West : Dir::East) = glue1(out);
            em.provenance.push_back(gname);

            in_cell = {x0 + 6, P.e};
            in_side = Dir::West;
            in_glue = out;
        }

        // The bump-threaded variants of the seed gadget figures: their cell
        // wiring differs when b = 1, checked here against the intended bump
        // positions (x0+3, e+1) and (x0+4, e+1).
        for (long long i = 0; i < 2 * k; ++i) {
            if (!bits[i]) continue;
            Point b1{2 + 6 * i + 3, P.e + 1}, b2{2 + 6 * i + 4, P.e + 1};
            if (!em.terminal().count(b1) || !em.terminal().count(b2))
                throw BuildError("initialization bump missing at slot " + std::to_string(i));
        }
    }

    // -- corner cases -----------------------------------------------------------

    GeneratedTas build_comb() {
        long long e = P.e;
        std::vector<Point> stem;
        for (long long y = 0; y < e; ++y) stem.push_back({0, y});
        if (e >= 1) {
            stem.push_back({1, e - 1});
            stem.push_back({2, e - 1});
        } else {
            stem.push_back({0, 0});
        }
        auto names = detail::lay_chain(em, "seed", stem, stem.front(), "");
        for (std::size_t i = 0; i < stem.size(); ++i) em.stamp(stem[i], names[i], "seed");
        em.provenance.push_back("comb stem (e=" + std::to_string(e) + ")");

        if (P.n >= 13) {
            long long first_row = e;
            std::string base_name;
            if (e >= 1) {
                base_name = names[static_cast<std::size_t>(e - 1)];  // stem top (0, e-1)
            } else {
                base_name = names[0];  // the seed doubles as the first spine tile
                em.tile(base_name).east = glue1("comb/row");
                first_row = 1;
            }
            std::string prev = em.fresh_glue("comb");
            em.tile(base_name).north = glue1(prev);
            for (long long y = first_row; y < P.n; ++y) {
                std::string name = "comb/spine" + std::to_string(y);
                TileType& t = em.tile(name);
                t.south = glue1(prev);
                t.east = glue1("comb/row");
                if (y + 1 < P.n) {
                    prev = em.fresh_glue("comb");
                    t.north = glue1(prev);
                }
                em.stamp({0, y}, name, "comb-spine");
            }
            std::string prev_row = "comb/row";
            for (long long x = 1; x < P.K; ++x) {
                std::string name = "comb/r" + std::to_string(x);
                TileType& t = em.tile(name);
                t.west = glue1(prev_row);
                if (x + 1 < P.K) {
                    prev_row = "comb/row" + std::to_string(x);
                    t.east = glue1(prev_row);
                }
                for (long long y = e; y < P.n; ++y) em.stamp({x, y}, name, "comb-rows");
            }
            em.provenance.push_back("comb rows");
        }
        GeneratedTas out;
        out.expected_terminal = em.terminal();
        for (const auto& [p, t] : out.expected_terminal) out.expected_domain.insert(p);
        out.tile_count = em.tile_count();
        out.provenance = em.provenance;
        out.tas = std::make_unique<Tas>(em.freeze(), Point{0, 0},
                                        out.expected_terminal.at(Point{0, 0}));
        return out;
    }

    GeneratedTas finish() {
        std::set<Point> want;
        for (long long y = 0; y < P.e; ++y) want.insert({0, y});
        if (P.e >= 1) {
            want.insert({1, P.e - 1});
            want.insert({2, P.e - 1});
        }
        for (long long x = 0; x < K; ++x)
            for (long long y = P.e; y < P.n; ++y) want.insert({x, y});
        std::set<Point> got;
        for (const auto& [p, t] : em.terminal()) got.insert(p);
        if (got != want) {
            for (Point p : want)
                if (!got.count(p)) throw BuildError("expected domain is missing " + to_string(p));
            for (Point p : got)
                if (!want.count(p))
                    throw BuildError("unexpected cell outside target " + to_string(p));
        }
        check_competition_geometry();
        if (static_cast<long long>(decl.pocs.size()) != 4 * k * P.m)
            throw BuildError("expected 4km competitions");

        GeneratedTas out;
        out.decl = std::move(decl);
        out.expected_terminal = em.terminal();
        out.expected_domain = std::move(want);
        out.tile_count = em.tile_count();
        out.provenance = em.provenance;
        Point seed_pt = P.e == 0 ? Point{2, 0} : Point{0, 0};
        out.tas = std::make_unique<Tas>(em.freeze(), seed_pt, out.expected_terminal.at(seed_pt));
        return out;
    }

    void check_competition_geometry() const {
        for (const CompetitionSpec& c : decl.competitions) {
            const auto& short_path = c.rigged ? c.losing_path : c.winning_path;
            const auto& long_path = c.rigged ? c.winning_path : c.losing_path;
            if (static_cast<long long>(short_path.size()) != 4)
                throw BuildError("short competing path must have length 4");
            if (static_cast<long long>(long_path.size()) != 4 * h - 10)
                throw BuildError("long competing path must have length 4h-10");
            for (const auto* path : {&c.winning_path, &c.losing_path}) {
                std::set<Point> seen;
                for (Point p : *path)
                    if (!seen.insert(p).second) throw BuildError("competing path is not simple");
            }
            std::set<Point> a(c.winning_path.begin(), c.winning_path.end());
            int shared = 0;
            for (Point p : c.losing_path)
                if (a.count(p)) ++shared;
            if (shared != 2) throw BuildError("competing paths must meet only at start and POC");
            long long minx = c.poc.x, maxx = c.poc.x, miny = c.poc.y, maxy = c.poc.y;
            for (const auto* path : {&c.winning_path, &c.losing_path})
                for (Point p : *path) {
                    minx = std::min(minx, p.x);
                    maxx = std::max(maxx, p.x);
                    miny = std::min(miny, p.y);
                    maxy = std::max(maxy, p.y);
                }
            if (maxx - minx + 1 > 6 || maxy - miny + 1 > h)
                throw BuildError("competition exceeds its 6 x h bounding box");
        }
    }
};

}  // namespace

GeneratedTas build_counter(const BuildParams& params) {
    CounterBuilder builder(params);
    return builder.build();
}

}  // namespace snd
