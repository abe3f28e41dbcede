#include "snd/assembly.hpp"

#include <deque>

namespace snd {

std::vector<std::pair<Point, Point>> binding_graph(const TileSet& tiles, const Assembly& a) {
    std::vector<std::pair<Point, Point>> edges;
    for (const auto& [p, t] : a.placements()) {
        // Report each edge from its lexicographically smaller endpoint via
        // north/east probes only.
        for (Dir d : {Dir::North, Dir::East}) {
            Point q = step(p, d);
            int u = a.at(q);
            if (u < 0) continue;
            if (glues_bind(tiles[t].side(d), tiles[u].side(opposite(d)))) edges.emplace_back(p, q);
        }
    }
    return edges;
}

std::map<Point, std::vector<Point>> binding_adjacency(const TileSet& tiles, const Assembly& a) {
    std::map<Point, std::vector<Point>> adj;
    for (const auto& [p, t] : a.placements()) adj[p];
    for (const auto& [p, q] : binding_graph(tiles, a)) {
        adj[p].push_back(q);
        adj[q].push_back(p);
    }
    return adj;
}

bool tau1_stable(const TileSet& tiles, const Assembly& a) {
    if (a.size() == 0) return false;
    auto adj = binding_adjacency(tiles, a);
    std::set<Point> seen;
    std::deque<Point> queue{adj.begin()->first};
    seen.insert(adj.begin()->first);
    while (!queue.empty()) {
        Point p = queue.front();
        queue.pop_front();
        for (Point q : adj[p])
            if (seen.insert(q).second) queue.push_back(q);
    }
    return seen.size() == a.size();
}

}  // namespace snd
