#ifndef DP4_TEST_ORACLES_HPP
#define DP4_TEST_ORACLES_HPP

// Independent oracles, deliberately dumber than the library: plain box
// enumeration, recursive decomposition into lines, and exact interpolation
// over Q at the default five points. They share no code path with the
// implementations they check.

#include <cstdint>
#include <vector>

#include "dp4/lattice.hpp"

namespace oracle {

// Exhaustive scan of the coefficient box |a| <= 3, |b_i| <= 2, which covers
// every solution for n <= 5: Cauchy-Schwarz on sum(b_i) = -k - 3a and
// sum(b_i^2) = a^2 - s gives a in [0, 2] for lines (s = -1, k = -1),
// |a| <= 1 for roots (s = -2, k = 0), a in [1, 2] for conic classes
// (s = 0, k = -2), and |b_i| <= sqrt(a^2 - s) <= sqrt(6) < 3 throughout.
std::vector<dp4::DivisorClass> box_lines(int n);
std::vector<dp4::DivisorClass> box_roots(int n);
std::vector<dp4::DivisorClass> box_conics(int n);

// Effectivity by memoized decomposition into (-1)-classes from box_lines(5):
// D is effective iff D = 0 or D - E is effective for some line E. The
// anticanonical degree drops by one per step, so the recursion is finite.
bool effective_by_decomposition(const dp4::DivisorClass& d);

// h^0 by exact linear algebra: strip exceptional fixed parts (positive e_i
// coefficients), then count degree-a plane curves with the prescribed
// multiplicities at (1:0:0), (0:1:0), (0:0:1), (1:1:1), (1:2:3) as the
// corank of the exact condition matrix over Q.
std::int64_t h0_interpolation(const dp4::DivisorClass& d);

struct Ne1eGolden {
    std::size_t corpus = 0;
    std::size_t h0_le_1 = 0;
    std::size_t residual_not_effective = 0;
    std::size_t violations = 0;
};

// The full search redone on the oracle side only.
Ne1eGolden ne1e_bruteforce();

}  // namespace oracle

#endif
