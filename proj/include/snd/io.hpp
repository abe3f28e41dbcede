#ifndef SND_IO_HPP
#define SND_IO_HPP

#include <iosfwd>
#include <memory>
#include <set>
#include <string>

#include "snd/tas.hpp"
#include "snd/verifier.hpp"

namespace snd {

struct ParseError : std::runtime_error {
    int line = 0;
    ParseError(int line_number, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

// Percent-encoding for glue labels and tile names: unreserved characters
// [A-Za-z0-9._~-] pass through, everything else (including UTF-8 bytes)
// becomes %XX.
std::string percent_encode(const std::string& raw);
std::string percent_decode(const std::string& encoded);

// tasfile v1:
//   header line "tasfile v1", comment lines starting with '#',
//   tile lines  "tile <name> n=<label>:<strength> e=... s=... w=..."
//   seed line   "seed <name> <x> <y>"  (exactly one)
// The null glue serializes as "-:0".
std::string serialize_tas(const Tas& tas);
std::unique_ptr<Tas> parse_tas(std::istream& in);
std::unique_ptr<Tas> load_tas(const std::string& path);

// Shape file: one "<x> <y>" per line, sorted.
std::string serialize_shape(const std::set<Point>& shape);
std::set<Point> parse_shape(std::istream& in);
std::set<Point> load_shape(const std::string& path);

// Declaration file, one POC per line in essential order:
//   poc <x> <y> winner=<tile> start=<x> <y> lwin=<int> llose=<int> [rigged]
std::string serialize_decl(const SndDeclaration& decl);
SndDeclaration parse_decl(std::istream& in);
SndDeclaration load_decl(const std::string& path);

void write_file(const std::string& path, const std::string& contents);

}  // namespace snd

#endif
