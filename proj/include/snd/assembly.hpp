#ifndef SND_ASSEMBLY_HPP
#define SND_ASSEMBLY_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snd/geometry.hpp"
#include "snd/tiles.hpp"

namespace snd {

// A finite, connected placement of tile types on the integer lattice.
// Placements are kept in a sorted map so iteration order is canonical.
class Assembly {
  public:
    using Placements = std::map<Point, TileSet::Id>;

    Assembly() = default;
    Assembly(Point seed, TileSet::Id t) { placements_.emplace(seed, t); }

    const Placements& placements() const { return placements_; }
    std::size_t size() const { return placements_.size(); }
    bool occupied(Point p) const { return placements_.count(p) > 0; }

    // Tile id at p; -1 when empty.
    int at(Point p) const {
        auto it = placements_.find(p);
        return it == placements_.end() ? -1 : it->second;
    }

    void place(Point p, TileSet::Id t) {
        auto [it, fresh] = placements_.emplace(p, t);
        (void)it;
        if (!fresh) throw std::invalid_argument("point already occupied: " + to_string(p));
    }

    bool agrees_with(const Assembly& other) const {
        const Assembly* small = this;
        const Assembly* big = &other;
        if (small->size() > big->size()) std::swap(small, big);
        for (const auto& [p, t] : small->placements()) {
            int u = big->at(p);
            if (u >= 0 && u != t) return false;
        }
        return true;
    }

    bool subassembly_of(const Assembly& other) const {
        if (size() > other.size()) return false;
        for (const auto& [p, t] : placements_)
            if (other.at(p) != t) return false;
        return true;
    }

    std::set<Point> domain() const {
        std::set<Point> d;
        for (const auto& [p, t] : placements_) d.insert(p);
        return d;
    }

    // Canonical text key: "x,y,id;" in sorted point order. Used as a hash key
    // by the exact-enumeration DAG so converging sequences share a node.
    std::string canonical_key() const {
        std::string k;
        k.reserve(placements_.size() * 8);
        for (const auto& [p, t] : placements_) {
            k += std::to_string(p.x);
            k += ',';
            k += std::to_string(p.y);
            k += ',';
            k += std::to_string(t);
            k += ';';
        }
        return k;
    }

    friend bool operator==(const Assembly& a, const Assembly& b) {
        return a.placements_ == b.placements_;
    }
    friend bool operator<(const Assembly& a, const Assembly& b) {
        return a.placements_ < b.placements_;
    }

  private:
    Placements placements_;
};

// Undirected binding-graph edges: adjacent occupied points whose opposing
// glues bind. Each edge reported once with endpoints ordered.
std::vector<std::pair<Point, Point>> binding_graph(const TileSet& tiles, const Assembly& a);

// True when the binding graph is connected over the whole domain (tau = 1
// stability for singly-seeded systems).
bool tau1_stable(const TileSet& tiles, const Assembly& a);

// Adjacency lists of the binding graph keyed by point.
std::map<Point, std::vector<Point>> binding_adjacency(const TileSet& tiles, const Assembly& a);

}  // namespace snd

#endif
