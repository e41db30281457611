#ifndef DP4_LINSYS_HPP
#define DP4_LINSYS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dp4/curves.hpp"
#include "dp4/lattice.hpp"

namespace dp4 {

// Effectivity and h^0 on the n = 5 blow-up rest on two standard del Pezzo
// facts imported here (not proved by this library):
//   1. the effective monoid is generated by the (-1)-classes, and
//   2. a nonzero nef class D has D.(-K) > 0 and h^0(D) = rr_chi(D)
//      (h^1 = h^2 = 0 in that regime).
// Everything else is exact lattice arithmetic.

struct PeelStep {
    DivisorClass line;
    std::int64_t multiplicity;
};

struct H0Result {
    std::int64_t value;                // h^0
    std::vector<PeelStep> peel_trace;  // fixed components removed, in order
    DivisorClass nef_part;             // class the peeling stopped at
    bool effective;                    // value > 0
};

// Deterministic peeling in the given line order: while some line E has
// D.E < 0, replace D by D - E; stop with h^0 = 0 as soon as D.(-K) < 0.
// A nef endpoint gives h^0 = 1 (D = 0) or rr_chi(D).
H0Result h0_with_lines(const DivisorClass& d, const std::vector<NamedLine>& lines);

// Same with the canonical (lexicographic) line order. n = 5 only.
H0Result h0(const DivisorClass& d);

bool is_effective(const DivisorClass& d);

// Exhaustive replay of the non-existence search: no divisor class d has both
// h^0(d) > 1 and -K - 2d effective. Candidate bound: pairing -K - 2d >= 0
// against the nef class -K forces d.(-K) <= 2, and h^0 > 1 forces d
// effective; since every line has (-K)-degree 1 and the effective monoid is
// line-generated, the candidates are exactly the sums of at most two lines
// (conic classes arise among the pair sums and are also added explicitly).
enum class Ne1eReason { H0AtMostOne, ResidualNotEffective };

struct Ne1eOutcome {
    std::vector<DivisorClass> corpus;      // deduplicated, canonically sorted
    std::size_t rejected_h0 = 0;           // h^0(d) <= 1
    std::size_t rejected_residual = 0;     // -K - 2d not effective
    std::vector<DivisorClass> violations;  // expected empty
};

Ne1eOutcome ne1e_search();

// The candidate corpus alone (for property tests over the same classes).
std::vector<DivisorClass> ne1e_corpus();

}  // namespace dp4

#endif
