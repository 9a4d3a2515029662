#pragma once

#include <string>
#include <vector>

#include "unitsep/group.hpp"

namespace unitsep {

// A finite presentation. Relator letters are signed generator references:
// +(i+1) for generator i, -(i+1) for its inverse.
struct Presentation {
    std::vector<std::string> gens;
    std::vector<std::vector<int>> relators;

    int gen_index(const std::string& name) const;
};

// Parses the presentation file format:
//   # comment
//   gens: a b c
//   b a = c^2 a b
//   a^2 = 1
// Each equation line contributes the relator lhs * rhs^-1.
Presentation parse_presentation(const std::string& text);

// Word in a presentation's generators, e.g. "c^2 a b" or "1".
std::vector<int> parse_word(const Presentation& p, const std::string& text);

// HLT coset enumeration over the trivial subgroup. When it closes, the group
// is returned via the regular action on cosets, converted to a Cayley table.
// Deterministic for a fixed presentation. Throws CosetOverflow /
// EmptyPresentation.
FiniteGroup todd_coxeter(const Presentation& p, int max_cosets = 10000);

} // namespace unitsep
