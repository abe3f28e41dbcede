#ifndef SND_GEOMETRY_HPP
#define SND_GEOMETRY_HPP

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace snd {

struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

inline Point north(Point p) { return {p.x, p.y + 1}; }
inline Point east(Point p) { return {p.x + 1, p.y}; }
inline Point south(Point p) { return {p.x, p.y - 1}; }
inline Point west(Point p) { return {p.x - 1, p.y}; }

// The four lattice neighbors in a fixed scan order (N, E, S, W).
inline std::array<Point, 4> neighbors(Point p) {
    return {north(p), east(p), south(p), west(p)};
}

inline bool adjacent(Point p, Point q) {
    std::int64_t dx = std::abs(p.x - q.x), dy = std::abs(p.y - q.y);
    return dx + dy == 1;
}

enum class Dir : int { North = 0, East = 1, South = 2, West = 3 };

inline Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

inline Point step(Point p, Dir d) {
    switch (d) {
        case Dir::North: return north(p);
        case Dir::East: return east(p);
        case Dir::South: return south(p);
        case Dir::West: return west(p);
    }
    return p;
}

// Direction from p toward adjacent q.
inline Dir dir_to(Point p, Point q) {
    if (q.y == p.y + 1) return Dir::North;
    if (q.x == p.x + 1) return Dir::East;
    if (q.y == p.y - 1) return Dir::South;
    return Dir::West;
}

inline std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

struct PointHash {
    std::size_t operator()(const Point& p) const noexcept {
        std::uint64_t a = static_cast<std::uint64_t>(p.x);
        std::uint64_t b = static_cast<std::uint64_t>(p.y);
        std::uint64_t h = a * 0x9e3779b97f4a7c15ULL ^ (b + 0x7f4a7c159e3779b9ULL + (a << 6) + (a >> 2));
        h ^= h >> 29;
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 32;
        return static_cast<std::size_t>(h);
    }
};

}  // namespace snd

#endif
