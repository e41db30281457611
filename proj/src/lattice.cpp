#include "dp4/lattice.hpp"

#include <sstream>

namespace dp4 {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in add");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in sub");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in mul");
    return r;
}

DivisorClass::DivisorClass(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InputError("divisor class needs at least the l-coefficient");
}

DivisorClass DivisorClass::zero(int n_points) {
    if (n_points < 0) throw InputError("negative point count");
    return DivisorClass(std::vector<std::int64_t>(static_cast<std::size_t>(n_points) + 1, 0));
}

static void require_same_rank(const DivisorClass& a, const DivisorClass& b) {
    if (a.rank() != b.rank())
        throw LatticeMismatchError("classes live in lattices of rank " + std::to_string(a.rank()) +
                                   " and " + std::to_string(b.rank()));
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    require_same_rank(*this, o);
    std::vector<std::int64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_add(c_[i], o.c_[i]);
    return DivisorClass(std::move(r));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    require_same_rank(*this, o);
    std::vector<std::int64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_sub(c_[i], o.c_[i]);
    return DivisorClass(std::move(r));
}

DivisorClass DivisorClass::operator-() const {
    std::vector<std::int64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_sub(0, c_[i]);
    return DivisorClass(std::move(r));
}

DivisorClass DivisorClass::operator*(std::int64_t k) const {
    std::vector<std::int64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = checked_mul(c_[i], k);
    return DivisorClass(std::move(r));
}

bool DivisorClass::operator<(const DivisorClass& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
    return c_ < o.c_;
}

bool DivisorClass::is_zero() const {
    for (auto v : c_)
        if (v != 0) return false;
    return true;
}

std::string DivisorClass::str() const {
    std::ostringstream out;
    bool first = true;
    auto term = [&](std::int64_t coeff, const std::string& sym) {
        if (coeff == 0) return;
        if (first) {
            if (coeff < 0) out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? "-" : "+");
        }
        std::int64_t a = coeff < 0 ? -coeff : coeff;
        if (a != 1) out << a;
        out << sym;
    };
    term(c_[0], "l");
    for (std::size_t i = 1; i < c_.size(); ++i) term(c_[i], "e" + std::to_string(i));
    if (first) return "0";
    return out.str();
}

Lattice::Lattice(int n_points) : n(n_points) {
    if (n < 0) throw InputError("negative point count");
}

DivisorClass Lattice::l() const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    return DivisorClass(std::move(c));
}

DivisorClass Lattice::e(int i) const {
    if (i < 1 || i > n) throw InputError("e_" + std::to_string(i) + " outside 1.." + std::to_string(n));
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(i)] = 1;
    return DivisorClass(std::move(c));
}

DivisorClass Lattice::canonical() const {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 1);
    c[0] = -3;
    return DivisorClass(std::move(c));
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
    require_same_rank(a, b);
    std::int64_t acc = checked_mul(a[0], b[0]);
    for (int i = 1; i < a.rank(); ++i) acc = checked_sub(acc, checked_mul(a[i], b[i]));
    return acc;
}

std::int64_t self_intersection(const DivisorClass& d) { return intersect(d, d); }

std::int64_t anticanonical_degree(const DivisorClass& d) {
    Lattice lat(d.points());
    return checked_sub(0, intersect(d, lat.canonical()));
}

std::int64_t rr_chi(const DivisorClass& d) {
    Lattice lat(d.points());
    std::int64_t n2 = self_intersection(d);
    std::int64_t dk = intersect(d, lat.canonical());
    std::int64_t num = checked_sub(n2, dk);
    // D.(D-K) is even: mod 2 both D^2 and D.K reduce to c_0 + sum c_i.
    return checked_add(1, num / 2);
}

std::int64_t arith_genus(const DivisorClass& d) {
    Lattice lat(d.points());
    std::int64_t n2 = self_intersection(d);
    std::int64_t dk = intersect(d, lat.canonical());
    return checked_add(1, checked_add(n2, dk) / 2);
}

}  // namespace dp4
