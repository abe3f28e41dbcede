#ifndef SND_TILES_HPP
#define SND_TILES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "snd/geometry.hpp"

namespace snd {

// A glue is an opaque (label, strength) pair. The empty label is the null
// glue and must have strength 0.
struct Glue {
    std::string label;
    int strength = 0;

    Glue() = default;
    Glue(std::string l, int s) : label(std::move(l)), strength(s) {
        if (strength < 0) throw std::invalid_argument("glue strength must be >= 0");
        if (label.empty() != (strength == 0))
            throw std::invalid_argument("null glue iff empty label and strength 0");
    }

    bool is_null() const { return strength == 0; }

    friend bool operator==(const Glue& a, const Glue& b) {
        return a.strength == b.strength && a.label == b.label;
    }
    friend bool operator!=(const Glue& a, const Glue& b) { return !(a == b); }
};

inline Glue null_glue() { return Glue{}; }
inline Glue glue1(std::string label) { return Glue{std::move(label), 1}; }

// Two opposing glues bind iff equal labels, equal strengths and strength > 0.
inline bool glues_bind(const Glue& a, const Glue& b) {
    return a.strength > 0 && a == b;
}

struct TileType {
    std::string name;
    Glue north, east, south, west;

    const Glue& side(Dir d) const {
        switch (d) {
            case Dir::North: return north;
            case Dir::East: return east;
            case Dir::South: return south;
            case Dir::West: return west;
        }
        return north;
    }
    Glue& side(Dir d) {
        switch (d) {
            case Dir::North: return north;
            case Dir::East: return east;
            case Dir::South: return south;
            case Dir::West: return west;
        }
        return north;
    }
};

// Tile set with unique names and stable integer ids (index order = insertion
// order). Ids are what assemblies store.
class TileSet {
  public:
    using Id = int;

    Id add(TileType t) {
        if (index_.count(t.name)) throw std::invalid_argument("duplicate tile name: " + t.name);
        Id id = static_cast<Id>(tiles_.size());
        index_.emplace(t.name, id);
        tiles_.push_back(std::move(t));
        return id;
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    Id id_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw std::invalid_argument("unknown tile type: " + name);
        return it->second;
    }

    const TileType& operator[](Id id) const { return tiles_.at(static_cast<std::size_t>(id)); }
    const TileType& by_name(const std::string& name) const { return (*this)[id_of(name)]; }

    std::size_t size() const { return tiles_.size(); }
    const std::vector<TileType>& all() const { return tiles_; }

  private:
    std::vector<TileType> tiles_;
    std::map<std::string, Id> index_;
};

}  // namespace snd

#endif
