#include "dp4/covers.hpp"

#include <sstream>

#include "dp4/linsys.hpp"

namespace dp4 {

SClass::SClass(DivisorClass base_double, std::bitset<3> torsion)
    : v_(std::move(base_double)), t_(torsion) {}

SClass SClass::pullback(const DivisorClass& v) { return SClass(v * 2); }

SClass SClass::half_pullback(const DivisorClass& v) { return SClass(v); }

SClass SClass::torsion_eta(int i, int n_points) {
    if (i < 1 || i > 3) throw InputError("torsion generators are eta_1..eta_3");
    std::bitset<3> t;
    t.set(static_cast<std::size_t>(i - 1));
    return SClass(DivisorClass::zero(n_points), t);
}

SClass SClass::operator+(const SClass& o) const { return SClass(v_ + o.v_, t_ ^ o.t_); }

SClass SClass::operator-(const SClass& o) const { return SClass(v_ - o.v_, t_ ^ o.t_); }

SClass SClass::operator-() const { return SClass(-v_, t_); }

SClass SClass::operator*(std::int64_t k) const {
    std::bitset<3> t = (k % 2 == 0) ? std::bitset<3>{} : t_;
    return SClass(v_ * k, t);
}

std::string SClass::str() const {
    std::ostringstream out;
    out << "(1/2)phi*(" << v_.str() << ")";
    for (int i = 1; i <= 3; ++i)
        if (t_.test(static_cast<std::size_t>(i - 1))) out << "+eta" << i;
    return out.str();
}

std::int64_t pair(const SClass& a, const SClass& b) { return intersect(a.base_double(), b.base_double()); }

std::int64_t s_self(const SClass& a) { return pair(a, a); }

SClass s_canonical(int n_points) {
    Lattice lat(n_points);
    return SClass::half_pullback(-lat.canonical());
}

SClass s_eta() {
    Lattice lat(5);
    SClass eta = s_canonical();
    for (int i = 1; i <= 3; ++i) {
        // e'_i joins the other two of p_1..p_3
        int j = (i % 3) + 1, k = ((i + 1) % 3) + 1;
        DivisorClass eprime = lat.l() - lat.e(j) - lat.e(k);
        eta = eta - SClass::half_pullback(lat.e(i)) - SClass::half_pullback(eprime);
    }
    return eta;
}

std::int64_t sclass_chi(const SClass& d) {
    SClass ks = s_canonical(d.base_double().points());
    std::int64_t num = checked_sub(s_self(d), pair(d, ks));
    if (num % 2 != 0)
        throw BranchDataError("chi is not integral for " + d.str() + "; inconsistent class data");
    return checked_add(1, num / 2);
}

std::int64_t sclass_genus(const SClass& d) {
    SClass ks = s_canonical(d.base_double().points());
    std::int64_t num = checked_add(s_self(d), pair(d, ks));
    if (num % 2 != 0) throw BranchDataError("genus is not integral for " + d.str());
    return checked_add(1, num / 2);
}

CoverInvariants double_cover(std::int64_t base_chi, const SClass& k, const SClass& l,
                             std::int64_t h0_k_plus_l_lower) {
    SClass kl = k + l;
    CoverInvariants inv;
    inv.k2 = checked_mul(2, s_self(kl));
    std::int64_t t = pair(l, kl);
    if (t % 2 != 0)
        throw BranchDataError("L.(K+L) = " + std::to_string(t) + " is odd; inconsistent branch data");
    inv.chi = checked_add(checked_mul(2, base_chi), t / 2);
    inv.pg_lower = h0_k_plus_l_lower;
    inv.q_lower = std::max<std::int64_t>(0, inv.pg_lower - inv.chi + 1);
    return inv;
}

std::int64_t pg_lower_via_pullback(const DivisorClass& aux, const std::vector<SClass>& extra) {
    (void)extra;  // effective additions only grow h^0; the bound is h^0(aux)
    return h0(aux).value;
}

namespace {

DivisorClass half_of(const DivisorClass& d, const std::string& what) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d.rank()));
    for (int i = 0; i < d.rank(); ++i) {
        if (d[i] % 2 != 0)
            throw NotDivisibleError(what + " = " + d.str() + " has an odd coefficient; no square root");
        c[static_cast<std::size_t>(i)] = d[i] / 2;
    }
    return DivisorClass(std::move(c));
}

}  // namespace

BidoubleSplit bidouble_solve(const DivisorClass& d1, const DivisorClass& d2, const DivisorClass& d3) {
    BidoubleSplit s{half_of(d2 + d3, "D2+D3"), half_of(d1 + d3, "D1+D3"),
                    DivisorClass::zero(d1.points())};
    s.l3 = s.l1 + s.l2 - d3;
    return s;
}

CoverInvariants bidouble_invariants(const DivisorClass& d1, const DivisorClass& d2,
                                    const DivisorClass& d3) {
    Lattice lat(d1.points());
    BidoubleSplit s = bidouble_solve(d1, d2, d3);
    DivisorClass k = lat.canonical();
    CoverInvariants inv;
    DivisorClass total = k * 2 + d1 + d2 + d3;
    inv.k2 = self_intersection(total);
    std::int64_t acc = 0;
    for (const DivisorClass* li : {&s.l1, &s.l2, &s.l3}) acc = checked_add(acc, intersect(*li, k + *li));
    if (acc % 2 != 0) throw BranchDataError("sum L_i.(K+L_i) is odd; inconsistent bidouble data");
    inv.chi = checked_add(4, acc / 2);
    std::int64_t pg = 0;
    for (const DivisorClass* li : {&s.l1, &s.l2, &s.l3}) pg = checked_add(pg, h0(k + *li).value);
    inv.pg_lower = pg;
    inv.q_lower = std::max<std::int64_t>(0, pg - inv.chi + 1);
    return inv;
}

}  // namespace dp4
