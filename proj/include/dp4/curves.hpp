#ifndef DP4_CURVES_HPP
#define DP4_CURVES_HPP

#include <string>
#include <vector>

#include "dp4/lattice.hpp"

namespace dp4 {

// A (-1)-class together with its conventional name. For n = 5 the names are
// e_i, e'_j (strict transform of the line through the other two of p_1..p_3),
// g_j (through p_4 and p_j), h_j (through p_5 and p_j), gamma = l-e4-e5 and
// delta = 2l-e1-...-e5; for other n the name is the coefficient form.
struct NamedLine {
    DivisorClass cls;
    std::string name;
};

// All D with D^2 = -1, D.K = -1 and l-coefficient >= 0, sorted in the
// canonical (lexicographic) order. Finite for n <= 8; larger n throws
// UnsupportedRankError. For n = 5 this is the 16-line table.
std::vector<NamedLine> enumerate_lines(const Lattice& lat);

// All D with D^2 = -2, D.K = 0 (both signs), sorted. 40 classes for n = 5.
std::vector<DivisorClass> enumerate_roots(const Lattice& lat);

// The roots whose first nonzero coefficient is positive: one per +/- pair.
std::vector<DivisorClass> positive_roots(const Lattice& lat);

// All primitive D with D^2 = 0, D.K = -2 and l-coefficient >= 0, sorted.
// For n = 5: the ten classes {l-e_i} and {2l - sum_{j != i} e_j}.
std::vector<DivisorClass> enumerate_conic_classes(const Lattice& lat);

// Name a (-1)-class by the n = 5 scheme (falls back to coefficient form).
std::string line_name(const DivisorClass& cls);

// Look up a named line in the n = 5 table. Throws InputError on unknown name.
DivisorClass named_line(const std::string& name);

// One record per line: name, coefficient vector, row of intersection numbers
// against the whole (sorted) line set. This is the table the CLI emits and
// the golden file freezes.
std::string format_line_table(const std::vector<NamedLine>& lines);

}  // namespace dp4

#endif
