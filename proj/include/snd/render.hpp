#ifndef SND_RENDER_HPP
#define SND_RENDER_HPP

#include <string>
#include <vector>

#include "snd/tas.hpp"
#include "snd/verifier.hpp"

namespace snd {

// One glyph per tile family (the name prefix up to the first '/'), POCs
// marked '*' when a declaration is supplied.
std::string render_ascii(const Tas& tas, const Assembly& a, const SndDeclaration* decl);

// SVG 1.1: unit squares colored per family, POC outlines when declared.
std::string render_svg(const Tas& tas, const Assembly& a, const SndDeclaration* decl);

}  // namespace snd

#endif
