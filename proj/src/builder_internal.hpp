#ifndef SND_BUILDER_INTERNAL_HPP
#define SND_BUILDER_INTERNAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "snd/builder.hpp"

namespace snd::detail {

// Accumulates tile types plus the expected (w-correct) terminal placement.
// Gadget emitters create types once; stamping records where instance tiles
// sit in the correct terminal and catches footprint overlaps.
class Emitter {
  public:
    std::string fresh_glue(const std::string& prefix) {
        return prefix + "#" + std::to_string(glue_counter_++);
    }

    TileType& tile(const std::string& name) {
        auto [it, fresh] = tiles_.emplace(name, TileType{name, {}, {}, {}, {}});
        if (fresh) order_.push_back(name);
        return it->second;
    }

    bool has_tile(const std::string& name) const { return tiles_.count(name) > 0; }

    void stamp(Point p, const std::string& tile_name, const std::string& who) {
        auto [it, fresh] = terminal_.emplace(p, tile_name);
        if (!fresh)
            throw BuildError("overlapping gadget footprints at " + to_string(p) + ": " + who +
                             " vs " + owner_.at(p));
        owner_.emplace(p, who);
    }

    const std::map<Point, std::string>& terminal() const { return terminal_; }

    TileSet freeze() const {
        TileSet set;
        for (const std::string& name : order_) set.add(tiles_.at(name));
        return set;
    }

    std::size_t tile_count() const { return tiles_.size(); }

    std::vector<std::string> provenance;

  private:
    std::map<std::string, TileType> tiles_;
    std::vector<std::string> order_;
    std::map<Point, std::string> terminal_;
    std::map<Point, std::string> owner_;
    unsigned long long glue_counter_ = 0;
};

// Lays a chain of fresh tiles along `cells`. cells[i+1] binds to cells[i]
// with a fresh glue; the first cell binds to `in_glue` on the side facing
// `in_from` (pass in_from == cells.front() to skip the input glue). Returns
// the created tile names in order. Tiles are named prefix + "/" + index.
std::vector<std::string> lay_chain(Emitter& em, const std::string& prefix,
                                   const std::vector<Point>& cells, Point in_from,
                                   const std::string& in_glue);

// Orientation frame for slot-level gadgets: maps gadget-local coordinates
// (designed for leftward-assembling increment rows) into the global grid.
// flip mirrors x within the 6-wide slot and swaps east/west.
struct Frame {
    Point origin;   // global position of local (0, 0)
    bool flip = false;

    Point map(Point local) const {
        long long x = flip ? 5 - local.x : local.x;
        return {origin.x + x, origin.y + local.y};
    }
    Dir map(Dir d) const {
        if (!flip) return d;
        if (d == Dir::East) return Dir::West;
        if (d == Dir::West) return Dir::East;
        return d;
    }
};

// A 2-column frame for margin risers (columns are 2 wide, not 6).
struct RiserFrame {
    Point origin;  // global position of local (0, 0)
    bool flip = false;

    Point map(Point local) const {
        long long x = flip ? 1 - local.x : local.x;
        return {origin.x + x, origin.y + local.y};
    }
    Dir map(Dir d) const {
        if (!flip) return d;
        if (d == Dir::East) return Dir::West;
        if (d == Dir::West) return Dir::East;
        return d;
    }
};

}  // namespace snd::detail

#endif
