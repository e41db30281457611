#ifndef DP4_LATTICE_HPP
#define DP4_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dp4/errors.hpp"

namespace dp4 {

// Checked 64-bit arithmetic. Every intersection number in this library is
// tiny, so an overflow is always a bug or corrupted input and must be loud.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// A divisor class on the blow-up of the plane at n points, written in the
// basis (l, e_1, ..., e_n) of Z^{1,n}. The intersection form is
// diag(+1, -1, ..., -1) and the canonical class is K = -3l + e_1 + ... + e_n.
// Immutable value type; linear equivalence is coefficient equality.
class DivisorClass {
public:
    // coeffs[0] is the l-coefficient, coeffs[i] the e_i-coefficient.
    explicit DivisorClass(std::vector<std::int64_t> coeffs);

    static DivisorClass zero(int n_points);

    int points() const { return static_cast<int>(c_.size()) - 1; }
    int rank() const { return static_cast<int>(c_.size()); }

    std::int64_t operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::int64_t l_coeff() const { return c_[0]; }
    // i in 1..n
    std::int64_t e_coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

    const std::vector<std::int64_t>& coeffs() const { return c_; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator-() const;
    DivisorClass operator*(std::int64_t k) const;

    bool operator==(const DivisorClass& o) const { return c_ == o.c_; }
    bool operator!=(const DivisorClass& o) const { return c_ != o.c_; }
    // Lexicographic on coefficient vectors; the canonical total order used
    // for sorted enumeration output and orbit listings.
    bool operator<(const DivisorClass& o) const;

    bool is_zero() const;

    // Compact human form: "l-e4-e5", "2l-e1-e2-e3-e4-e5", "-3l+e1+...", "0".
    std::string str() const;

private:
    std::vector<std::int64_t> c_;
};

inline DivisorClass operator*(std::int64_t k, const DivisorClass& d) { return d * k; }

// The ambient lattice Z^{1,n} of the blow-up at n points.
struct Lattice {
    int n;

    explicit Lattice(int n_points);

    int rank() const { return n + 1; }

    DivisorClass zero() const { return DivisorClass::zero(n); }
    DivisorClass l() const;
    DivisorClass e(int i) const;  // i in 1..n
    // K = -3l + e_1 + ... + e_n
    DivisorClass canonical() const;
};

// a.b = a_0 b_0 - sum_{i>=1} a_i b_i. Throws LatticeMismatchError when the
// ranks differ.
std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);

std::int64_t self_intersection(const DivisorClass& d);

// Degree against -K; nonnegative on effective classes since -K is ample in
// the del Pezzo range.
std::int64_t anticanonical_degree(const DivisorClass& d);

// Riemann-Roch Euler characteristic chi(D) = 1 + (D^2 - D.K)/2 on a rational
// surface. D.(D-K) is even on this lattice, so the division is exact.
std::int64_t rr_chi(const DivisorClass& d);

// Adjunction genus 1 + (D^2 + D.K)/2.
std::int64_t arith_genus(const DivisorClass& d);

}  // namespace dp4

#endif
