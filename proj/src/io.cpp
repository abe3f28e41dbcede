#include "snd/io.hpp"

#include <fstream>
#include <sstream>

namespace snd {

namespace {

bool unreserved(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '.' || c == '_' || c == '~';
}

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_ll(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "malformed integer '" + s + "'");
    }
}

std::string glue_field(const Glue& g) {
    if (g.is_null()) return "-:0";
    return percent_encode(g.label) + ":" + std::to_string(g.strength);
}

Glue parse_glue_field(const std::string& field, int line) {
    auto colon = field.rfind(':');
    if (colon == std::string::npos) throw ParseError(line, "glue needs <label>:<strength>");
    std::string label = field.substr(0, colon);
    long long strength = parse_ll(field.substr(colon + 1), line);
    if (strength < 0) throw ParseError(line, "negative glue strength");
    if (label == "-" && strength == 0) return null_glue();
    if (strength == 0) throw ParseError(line, "only the null glue '-:0' may have strength 0");
    return Glue{percent_decode(label), static_cast<int>(strength)};
}

}  // namespace

std::string percent_encode(const std::string& raw) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    out.reserve(raw.size());
    for (unsigned char c : raw) {
        if (unreserved(c)) {
            out += static_cast<char>(c);
        } else {
            out += '%';
            out += hex[c >> 4];
            out += hex[c & 15];
        }
    }
    return out;
}

std::string percent_decode(const std::string& encoded) {
    std::string out;
    out.reserve(encoded.size());
    for (std::size_t i = 0; i < encoded.size(); ++i) {
        if (encoded[i] == '%' && i + 2 < encoded.size() + 1) {
            if (i + 2 >= encoded.size()) throw std::invalid_argument("truncated percent escape");
            int hi = hex_value(encoded[i + 1]), lo = hex_value(encoded[i + 2]);
            if (hi < 0 || lo < 0) throw std::invalid_argument("bad percent escape");
            out += static_cast<char>((hi << 4) | lo);
            i += 2;
        } else {
            out += encoded[i];
        }
    }
    return out;
}

std::string serialize_tas(const Tas& tas) {
    std::string out = "tasfile v1\n";
    for (const TileType& t : tas.tiles().all()) {
        out += "tile " + percent_encode(t.name) + " n=" + glue_field(t.north) +
               " e=" + glue_field(t.east) + " s=" + glue_field(t.south) +
               " w=" + glue_field(t.west) + "\n";
    }
    out += "seed " + percent_encode(tas.seed_name()) + " " + std::to_string(tas.seed_point().x) +
           " " + std::to_string(tas.seed_point().y) + "\n";
    return out;
}

std::unique_ptr<Tas> parse_tas(std::istream& in) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line) || line != "tasfile v1")
        throw ParseError(1, "expected header 'tasfile v1'");
    lineno = 1;
    TileSet tiles;
    bool have_seed = false;
    std::string seed_name;
    Point seed_point{};
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "tile") {
            if (toks.size() != 6) throw ParseError(lineno, "tile line needs name and 4 glues");
            TileType t;
            t.name = percent_decode(toks[1]);
            for (int i = 2; i < 6; ++i) {
                const std::string& f = toks[static_cast<std::size_t>(i)];
                if (f.size() < 2 || f[1] != '=') throw ParseError(lineno, "bad glue field " + f);
                Glue g = parse_glue_field(f.substr(2), lineno);
                switch (f[0]) {
                    case 'n': t.north = g; break;
                    case 'e': t.east = g; break;
                    case 's': t.south = g; break;
                    case 'w': t.west = g; break;
                    default: throw ParseError(lineno, "unknown glue side in " + f);
                }
            }
            try {
                tiles.add(std::move(t));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(lineno, ex.what());
            }
        } else if (toks[0] == "seed") {
            if (have_seed) throw ParseError(lineno, "duplicate seed line");
            if (toks.size() != 4) throw ParseError(lineno, "seed line needs name x y");
            seed_name = percent_decode(toks[1]);
            seed_point = {parse_ll(toks[2], lineno), parse_ll(toks[3], lineno)};
            have_seed = true;
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_seed) throw ParseError(lineno, "missing seed line");
    if (!tiles.contains(seed_name)) throw ParseError(lineno, "seed references unknown tile");
    return std::make_unique<Tas>(std::move(tiles), seed_point, seed_name);
}

std::string serialize_shape(const std::set<Point>& shape) {
    std::string out;
    for (Point p : shape) out += std::to_string(p.x) + " " + std::to_string(p.y) + "\n";
    return out;
}

std::set<Point> parse_shape(std::istream& in) {
    std::set<Point> shape;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw ParseError(lineno, "shape line needs '<x> <y>'");
        shape.insert({parse_ll(toks[0], lineno), parse_ll(toks[1], lineno)});
    }
    return shape;
}

std::string serialize_decl(const SndDeclaration& decl) {
    std::string out;
    for (std::size_t i = 0; i < decl.pocs.size(); ++i) {
        const CompetitionSpec& c = decl.competitions[i];
        out += "poc " + std::to_string(c.poc.x) + " " + std::to_string(c.poc.y) +
               " winner=" + percent_encode(decl.winner.at(c.poc)) +
               " start=" + std::to_string(c.start.x) + " " + std::to_string(c.start.y) +
               " lwin=" + std::to_string(c.l_win()) + " llose=" + std::to_string(c.l_lose());
        if (c.rigged) out += " rigged";
        out += "\n";
    }
    return out;
}

SndDeclaration parse_decl(std::istream& in) {
    SndDeclaration decl;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] != "poc") throw ParseError(lineno, "expected 'poc' line");
        if (toks.size() < 8) throw ParseError(lineno, "truncated poc line");
        CompetitionSpec c;
        c.poc = {parse_ll(toks[1], lineno), parse_ll(toks[2], lineno)};
        if (toks[3].rfind("winner=", 0) != 0) throw ParseError(lineno, "expected winner=");
        c.winner_tile = percent_decode(toks[3].substr(7));
        if (toks[4].rfind("start=", 0) != 0) throw ParseError(lineno, "expected start=");
        c.start = {parse_ll(toks[4].substr(6), lineno), parse_ll(toks[5], lineno)};
        if (toks[6].rfind("lwin=", 0) != 0) throw ParseError(lineno, "expected lwin=");
        c.lwin = parse_ll(toks[6].substr(5), lineno);
        if (toks[7].rfind("llose=", 0) != 0) throw ParseError(lineno, "expected llose=");
        c.llose = parse_ll(toks[7].substr(6), lineno);
        if (toks.size() > 8) {
            if (toks[8] != "rigged") throw ParseError(lineno, "unknown trailing token");
            c.rigged = true;
        }
        decl.pocs.push_back(c.poc);
        decl.starts.push_back(c.start);
        decl.winner[c.poc] = c.winner_tile;
        decl.competitions.push_back(std::move(c));
    }
    return decl;
}

std::unique_ptr<Tas> load_tas(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_tas(in);
}

std::set<Point> load_shape(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_shape(in);
}

SndDeclaration load_decl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_decl(in);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << contents;
}

}  // namespace snd
