#ifndef DP4_WEYL_HPP
#define DP4_WEYL_HPP

#include <cstddef>
#include <vector>

#include "dp4/curves.hpp"
#include "dp4/lattice.hpp"

namespace dp4 {

// An integer matrix acting on coefficient vectors, preserving the
// intersection form and fixing K. Reflections in (-2)-roots (and their
// compositions) are the only constructors used here.
class LatticeAutomorphism {
public:
    static LatticeAutomorphism identity(int n_points);

    int points() const { return rank_ - 1; }
    int rank() const { return rank_; }

    std::int64_t at(int row, int col) const {
        return m_[static_cast<std::size_t>(row) * static_cast<std::size_t>(rank_) +
                  static_cast<std::size_t>(col)];
    }

    DivisorClass apply(const DivisorClass& d) const;

    // Composition: (a * b).apply(d) == a.apply(b.apply(d)).
    LatticeAutomorphism operator*(const LatticeAutomorphism& o) const;

    bool operator==(const LatticeAutomorphism& o) const { return rank_ == o.rank_ && m_ == o.m_; }

    // Checks intersect(w e_i, w e_j) == intersect(e_i, e_j) over the basis.
    bool preserves_form() const;
    bool fixes_canonical() const;

private:
    LatticeAutomorphism(int rank, std::vector<std::int64_t> entries)
        : rank_(rank), m_(std::move(entries)) {}

    int rank_;
    std::vector<std::int64_t> m_;  // row-major

    friend LatticeAutomorphism reflection(const DivisorClass& root);
};

// The reflection D -> D + (D.root) root. Requires root^2 = -2 and
// root.K = 0 (throws NotARootError otherwise); the result is an involution.
LatticeAutomorphism reflection(const DivisorClass& root);

// The C(n,3) roots l - e_i - e_j - e_k whose reflections are the lattice
// actions of plane Cremona transformations centered at three of the points.
std::vector<DivisorClass> cremona_roots(const Lattice& lat);

// Closure of {start} under the generators, canonically sorted. Throws
// OrbitCapError once the closure exceeds cap; Weyl orbits of interest here
// stay tiny (line orbits <= 16, |W(D5)| = 1920), so the cap flags misuse.
std::vector<DivisorClass> orbit(const DivisorClass& start,
                                const std::vector<LatticeAutomorphism>& generators,
                                std::size_t cap = 10000);

// A single Cremona reflection carrying a non-exceptional (-1)-class onto one
// of e_1..e_5. The lattice-level content of the reduction-to-exceptional
// move; geometric realizability on a particular surface is a separate,
// unverified hypothesis.
struct CremonaWitness {
    DivisorClass root;   // l - e_i - e_j - e_k used
    DivisorClass image;  // the resulting e_i
    LatticeAutomorphism map;
};

// Requires n = 5, line a (-1)-class distinct from delta and from e_1..e_5.
// Searches the ten Cremona roots; throws SearchFailureError if no single
// reflection works (composing two would be the fallback, but every
// admissible input is covered by one).
CremonaWitness cremona_witness(const NamedLine& line);

}  // namespace dp4

#endif
