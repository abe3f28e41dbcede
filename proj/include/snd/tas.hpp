#ifndef SND_TAS_HPP
#define SND_TAS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "snd/assembly.hpp"
#include "snd/geometry.hpp"
#include "snd/tiles.hpp"

namespace snd {

// Singly-seeded, temperature-1 tile assembly system. The attachment index
// maps (direction, glue label) to the tile ids exposing that glue on that
// side, so frontier updates touch only matching candidates.
class Tas {
  public:
    Tas(TileSet tiles, Point seed_point, const std::string& seed_name)
        : tiles_(std::move(tiles)), seed_point_(seed_point), seed_tile_(tiles_.id_of(seed_name)) {
        build_index();
        build_name_ranks();
    }

    const TileSet& tiles() const { return tiles_; }
    Point seed_point() const { return seed_point_; }
    TileSet::Id seed_tile() const { return seed_tile_; }
    const std::string& seed_name() const { return tiles_[seed_tile_].name; }

    Assembly seed_assembly() const { return Assembly(seed_point_, seed_tile_); }

    // Tiles whose `d` side carries a strength-1+ glue with this label.
    const std::vector<TileSet::Id>& candidates(Dir d, const std::string& label) const {
        static const std::vector<TileSet::Id> none;
        auto it = index_[static_cast<int>(d)].find(label);
        return it == index_[static_cast<int>(d)].end() ? none : it->second;
    }

    // Rank of a tile id in lexicographic name order; frontier ordering uses
    // (x, y, name) per the reproducibility contract.
    int name_rank(TileSet::Id id) const { return name_rank_.at(static_cast<std::size_t>(id)); }

    // Total binding strength of t when placed at p against assembly a.
    int binding_strength(const Assembly& a, Point p, TileSet::Id t) const {
        int s = 0;
        const TileType& tt = tiles_[t];
        for (Dir d : {Dir::North, Dir::East, Dir::South, Dir::West}) {
            int nb = a.at(step(p, d));
            if (nb < 0) continue;
            const Glue& mine = tt.side(d);
            const Glue& theirs = tiles_[nb].side(opposite(d));
            if (glues_bind(mine, theirs)) s += mine.strength;
        }
        return s;
    }

  private:
    void build_index() {
        for (std::size_t i = 0; i < tiles_.size(); ++i) {
            const TileType& t = tiles_[static_cast<TileSet::Id>(i)];
            for (Dir d : {Dir::North, Dir::East, Dir::South, Dir::West}) {
                const Glue& g = t.side(d);
                if (!g.is_null()) index_[static_cast<int>(d)][g.label].push_back(static_cast<TileSet::Id>(i));
            }
        }
    }

    void build_name_ranks() {
        std::vector<std::pair<std::string, TileSet::Id>> names;
        names.reserve(tiles_.size());
        for (std::size_t i = 0; i < tiles_.size(); ++i)
            names.emplace_back(tiles_[static_cast<TileSet::Id>(i)].name, static_cast<TileSet::Id>(i));
        std::sort(names.begin(), names.end());
        name_rank_.assign(tiles_.size(), 0);
        for (std::size_t r = 0; r < names.size(); ++r)
            name_rank_[static_cast<std::size_t>(names[r].second)] = static_cast<int>(r);
    }

    TileSet tiles_;
    Point seed_point_;
    TileSet::Id seed_tile_;
    std::map<std::string, std::vector<TileSet::Id>> index_[4];
    std::vector<int> name_rank_;
};

// True iff p is empty, adjacent to the domain, and t binds with total
// strength >= 1. Throws when t is not in the tile set.
bool attachable(const Tas& tas, const Assembly& a, Point p, const std::string& tile_name);
bool attachable(const Tas& tas, const Assembly& a, Point p, TileSet::Id t);

// Value-semantics attachment step; throws AttachmentError if not attachable.
struct AttachmentError : std::runtime_error {
    Point point;
    std::string tile;
    AttachmentError(Point p, std::string t)
        : std::runtime_error("cannot attach " + t + " at " + to_string(p)), point(p), tile(std::move(t)) {}
};

Assembly attach(const Tas& tas, const Assembly& a, Point p, const std::string& tile_name);

}  // namespace snd

#endif
