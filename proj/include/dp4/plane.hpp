#ifndef DP4_PLANE_HPP
#define DP4_PLANE_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dp4/lattice.hpp"

namespace dp4::plane {

// Exact rationals only in this module: incidence is equality-of-zero, which
// floating point cannot certify.
using Rational = boost::multiprecision::cpp_rational;

// Homogeneous triple, stored normalized with the first nonzero coordinate
// equal to 1 so equality and hashing are plain component comparison.
struct HomTriple {
    std::array<Rational, 3> h;

    HomTriple(Rational a, Rational b, Rational c);

    bool operator==(const HomTriple& o) const { return h == o.h; }
    bool operator!=(const HomTriple& o) const { return h != o.h; }
    bool operator<(const HomTriple& o) const { return h < o.h; }

    std::string str() const;
};

struct ProjPoint : HomTriple {
    using HomTriple::HomTriple;
};

struct ProjLine : HomTriple {
    using HomTriple::HomTriple;
};

bool incident(const ProjPoint& p, const ProjLine& line);

// The line through two distinct points (cross product). Equal points throw
// InputError.
ProjLine join(const ProjPoint& p, const ProjPoint& q);

// The common point of two distinct lines.
ProjPoint meet(const ProjLine& a, const ProjLine& b);

Rational det3(const HomTriple& a, const HomTriple& b, const HomTriple& c);

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);

// True iff no three of the five points are collinear. Duplicate points throw
// InputError.
bool general_position(const std::array<ProjPoint, 5>& pts);

// The nine joining lines of the branch arrangement: e'_j through the other
// two of p_1..p_3, g_j through p_4 and p_j, h_j through p_5 and p_j.
struct BurniatArrangement {
    std::array<ProjPoint, 5> points;
    struct ArrLine {
        std::string name;
        ProjLine line;
    };
    std::array<ArrLine, 9> lines;
};

// Requires general position (throws InputError otherwise).
BurniatArrangement make_arrangement(const std::array<ProjPoint, 5>& pts);

// A triple of arrangement lines meeting at a point other than p_1..p_5;
// re-checkable by three incidence tests plus five inequality tests.
struct ConcurrencyWitness {
    std::array<std::string, 3> line_names;
    ProjPoint point;
};

struct NormalCrossingResult {
    bool pass = false;
    std::string reason;  // empty when pass
    std::optional<ConcurrencyWitness> witness;
};

// PASS iff (a) the nine lines are pairwise distinct and each passes through
// exactly its expected blown-up points, and (b) no three lines are
// concurrent anywhere outside p_1..p_5. Exact determinant tests over all 84
// line triples.
NormalCrossingResult normal_crossing(const BurniatArrangement& arr);

// Strict-transform class of an arrangement line: l minus the e_i of the
// blown-up points actually incident to it. Unknown name throws InputError.
DivisorClass class_of_line(const BurniatArrangement& arr, const std::string& name);

// B_i = e_i + e'_i + g_{i+1} + h_{i+1} (indices mod 3) as a lattice class,
// assembled from the computed incidences.
DivisorClass branch_class(const BurniatArrangement& arr, int i);

// (1:0:0), (0:1:0), (0:0:1), (1:1:1), (1:2:3).
std::array<ProjPoint, 5> default_points();

// One point per line, three whitespace-separated rationals "a b c"
// (integers or p/q). Exactly five points required.
std::array<ProjPoint, 5> parse_points(std::istream& in);
std::array<ProjPoint, 5> load_points_file(const std::string& path);

// Uniform integer coordinates in [lo, hi], resampled if all three vanish.
// May be degenerate; callers filter through general_position.
std::array<ProjPoint, 5> random_points(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace dp4::plane

#endif
