#include "snd/render.hpp"

#include <algorithm>
#include <map>

namespace snd {

namespace {

std::string family_of(const std::string& name) {
    auto slash = name.find('/');
    return slash == std::string::npos ? name : name.substr(0, slash);
}

struct Bounds {
    long long minx = 0, maxx = 0, miny = 0, maxy = 0;
};

Bounds bounds_of(const Assembly& a) {
    Bounds b;
    bool first = true;
    for (const auto& [p, t] : a.placements()) {
        if (first) {
            b = {p.x, p.x, p.y, p.y};
            first = false;
        } else {
            b.minx = std::min(b.minx, p.x);
            b.maxx = std::max(b.maxx, p.x);
            b.miny = std::min(b.miny, p.y);
            b.maxy = std::max(b.maxy, p.y);
        }
    }
    return b;
}

}  // namespace

std::string render_ascii(const Tas& tas, const Assembly& a, const SndDeclaration* decl) {
    static const char glyphs[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";
    std::map<std::string, char> glyph_of;
    auto glyph = [&](const std::string& family) {
        auto it = glyph_of.find(family);
        if (it == glyph_of.end())
            it = glyph_of.emplace(family, glyphs[glyph_of.size() % (sizeof(glyphs) - 1)]).first;
        return it->second;
    };
    Bounds b = bounds_of(a);
    std::string out;
    for (long long y = b.maxy; y >= b.miny; --y) {
        for (long long x = b.minx; x <= b.maxx; ++x) {
            Point p{x, y};
            int t = a.at(p);
            char c = '.';
            if (t >= 0) {
                c = glyph(family_of(tas.tiles()[t].name));
                if (decl && decl->is_poc(p)) c = '*';
            }
            out += c;
        }
        out += '\n';
    }
    out += "# legend:\n";
    for (const auto& [family, g] : glyph_of) out += std::string("#  ") + g + " = " + family + "\n";
    if (decl) out += "#  * = POC\n";
    return out;
}

std::string render_svg(const Tas& tas, const Assembly& a, const SndDeclaration* decl) {
    static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
                                    "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd"};
    std::map<std::string, std::string> color_of;
    auto color = [&](const std::string& family) {
        auto it = color_of.find(family);
        if (it == color_of.end())
            it = color_of.emplace(family, palette[color_of.size() % 10]).first;
        return it->second;
    };
    Bounds b = bounds_of(a);
    const int cell = 10;
    long long w = (b.maxx - b.minx + 1) * cell, h = (b.maxy - b.miny + 1) * cell;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(w) + "\" height=\"" + std::to_string(h) + "\">\n";
    for (const auto& [p, t] : a.placements()) {
        long long x = (p.x - b.minx) * cell;
        long long y = (b.maxy - p.y) * cell;
        out += "<rect x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
               std::to_string(cell) + "\" height=\"" + std::to_string(cell) + "\" fill=\"" +
               color(family_of(tas.tiles()[t].name)) + "\"";
        if (decl && decl->is_poc(p)) out += " stroke=\"#000000\" stroke-width=\"2\"";
        out += "/>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace snd
