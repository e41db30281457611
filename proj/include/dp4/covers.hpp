#ifndef DP4_COVERS_HPP
#define DP4_COVERS_HPP

#include <bitset>
#include <string>
#include <vector>

#include "dp4/lattice.hpp"

namespace dp4 {

// Half-integral pullback classes on the quadruple cover S of the degree-4
// del Pezzo base. An SClass stores the base vector v with the class equal to
// (1/2) phi^*(v); the degree-4 pullback scales intersection numbers by 4, so
// pair(a, b) = base form on (v_a, v_b) is always an integer. The canonical
// class of S is (1/2) phi^*(-K) because phi^*(-K) = 2 K_S on this model.
//
// The torsion component is a formal (Z_2)^3 with generators eta_1..eta_3.
// Torsion never contributes to intersection numbers; linear equivalence is
// equality of (vector, torsion), numerical equivalence of the vector alone.
// Relations among the eta_i beyond 2 eta_i = 0 (fiber restrictions,
// pairwise distinctness) are sheaf-level facts outside this model and are
// carried as axioms in reports, never enforced here.
class SClass {
public:
    SClass(DivisorClass base_double, std::bitset<3> torsion = {});

    // phi^*(v): stores 2v.
    static SClass pullback(const DivisorClass& v);
    // (1/2) phi^*(v): stores v (the halved branch components E_i, E'_i, ...).
    static SClass half_pullback(const DivisorClass& v);
    // The order-2 generators eta_i, i in 1..3: numerically trivial.
    static SClass torsion_eta(int i, int n_points = 5);

    // The vector v with this class = (1/2) phi^*(v).
    const DivisorClass& base_double() const { return v_; }
    const std::bitset<3>& torsion() const { return t_; }

    SClass operator+(const SClass& o) const;
    SClass operator-(const SClass& o) const;
    SClass operator-() const;
    SClass operator*(std::int64_t k) const;

    // Linear equivalence.
    bool operator==(const SClass& o) const { return v_ == o.v_ && t_ == o.t_; }
    bool operator!=(const SClass& o) const { return !(*this == o); }
    bool numerically_equal(const SClass& o) const { return v_ == o.v_; }

    std::string str() const;

private:
    DivisorClass v_;
    std::bitset<3> t_;
};

// Intersection number on S: base form on the stored vectors.
std::int64_t pair(const SClass& a, const SClass& b);
std::int64_t s_self(const SClass& a);

// K_S = (1/2) phi^*(-K) for the lattice of a's rank.
SClass s_canonical(int n_points = 5);

// eta = K_S - sum_{i=1..3}(E_i + E'_i), computed from that definition; its
// double is -(E_4 + E_5) as a vector identity.
SClass s_eta();

// chi(D) = 1 + (D^2 - D.K_S)/2; the parity check is a cheap consistency
// oracle on the input data (throws BranchDataError when odd).
std::int64_t sclass_chi(const SClass& d);

// Adjunction genus 1 + (D^2 + D.K_S)/2 (e.g. the pulled-back pencil classes
// F_i have F_i^2 = 0, K_S.F_i = 4, genus 3).
std::int64_t sclass_genus(const SClass& d);

// Invariants of a branched double cover computed from (K, L) with branch
// class 2L: K^2 = 2(K+L)^2, chi = 2 chi_base + L.(K+L)/2, p_g bounded below
// by h^0(K+L), q bounded below by p_g - chi + 1 (floored at 0).
struct CoverInvariants {
    std::int64_t k2 = 0;
    std::int64_t chi = 0;       // validated integral
    std::int64_t pg_lower = 0;  // exact for bidouble covers of the base
    std::int64_t q_lower = 0;
};

CoverInvariants double_cover(std::int64_t base_chi, const SClass& k, const SClass& l,
                             std::int64_t h0_k_plus_l_lower);

// h^0 of the base class aux, valid as a lower bound for h^0 of
// phi^*(aux) + sum(extra) for effective extra classes (adding effective
// curves never loses sections). The extra list only documents the target.
std::int64_t pg_lower_via_pullback(const DivisorClass& aux, const std::vector<SClass>& extra);

// 2L1 = D2+D3, 2L2 = D1+D3, L3 = L1+L2-D3. Throws NotDivisibleError when a
// required half does not exist (the cover does not exist for this data).
struct BidoubleSplit {
    DivisorClass l1, l2, l3;
};

BidoubleSplit bidouble_solve(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3);

// Smooth bidouble cover of the n = 5 base, branch divisors D_i:
//   K^2 = (2K + D1 + D2 + D3)^2,
//   chi = 4 chi(O) + (1/2) sum L_i.(K + L_i),
//   p_g = sum h^0(K + L_i),  q = p_g - chi + 1.
// Standard formulas for the flat (Z_2)^2 construction, imported as given;
// the branch data checks (divisibility, normal crossing) are the caller's
// and plane-config's responsibility.
CoverInvariants bidouble_invariants(const DivisorClass& d1, const DivisorClass& d2,
                                    const DivisorClass& d3);

}  // namespace dp4

#endif
