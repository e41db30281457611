#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using dp4::DivisorClass;
using dp4::Lattice;
using Rational = boost::multiprecision::cpp_rational;

namespace {

// Every coefficient vector with |a| <= 3, |b_i| <= 2, filtered by the two
// defining equations. 7 * 5^n points, n <= 5.
std::vector<DivisorClass> box_scan(int n, std::int64_t self, std::int64_t deg_k, bool want_l_nonneg,
                                   bool want_primitive) {
    std::vector<DivisorClass> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = -3;
    for (;;) {
        std::int64_t sq = c[0] * c[0];
        std::int64_t dk = -3 * c[0];
        for (int i = 1; i <= n; ++i) {
            sq -= c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
            dk -= c[static_cast<std::size_t>(i)];
        }
        bool keep = sq == self && dk == deg_k;
        if (keep && want_l_nonneg) keep = c[0] >= 0;
        if (keep && want_primitive) {
            std::int64_t g = 0;
            for (auto v : c) g = std::gcd(g, v);
            keep = g == 1;
        }
        if (keep) out.push_back(DivisorClass(c));
        // odometer over the box
        int pos = n;
        while (pos >= 0) {
            std::int64_t hi = pos == 0 ? 3 : 2;
            if (c[static_cast<std::size_t>(pos)] < hi) {
                ++c[static_cast<std::size_t>(pos)];
                break;
            }
            c[static_cast<std::size_t>(pos)] = pos == 0 ? -3 : -2;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<DivisorClass> box_lines(int n) { return box_scan(n, -1, -1, true, false); }

std::vector<DivisorClass> box_roots(int n) { return box_scan(n, -2, 0, false, false); }

std::vector<DivisorClass> box_conics(int n) { return box_scan(n, 0, -2, true, true); }

bool effective_by_decomposition(const DivisorClass& d) {
    static const std::vector<DivisorClass> lines = box_lines(5);
    static std::map<DivisorClass, bool> memo;
    if (d.is_zero()) return true;
    auto hit = memo.find(d);
    if (hit != memo.end()) return hit->second;
    bool ok = false;
    if (dp4::anticanonical_degree(d) > 0) {
        for (const auto& e : lines) {
            if (effective_by_decomposition(d - e)) {
                ok = true;
                break;
            }
        }
    }
    memo.emplace(d, ok);
    return ok;
}

namespace {

struct Monomial {
    int i, j, k;  // exponents of x, y, z, i + j + k = a
};

std::vector<Monomial> monomials(int degree) {
    std::vector<Monomial> out;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) out.push_back({i, j, degree - i - j});
    return out;
}

Rational pow_rat(const Rational& base, int e) {
    Rational r = 1;
    for (int t = 0; t < e; ++t) r *= base;
    return r;
}

std::int64_t falling(int n, int k) {
    std::int64_t r = 1;
    for (int t = 0; t < k; ++t) r *= (n - t);
    return r;
}

// d^(a0,a1,a2) of x^i y^j z^k evaluated at p.
Rational deriv_at(const Monomial& m, int a0, int a1, int a2, const std::array<Rational, 3>& p) {
    if (m.i < a0 || m.j < a1 || m.k < a2) return 0;
    Rational coeff = falling(m.i, a0) * falling(m.j, a1) * falling(m.k, a2);
    return coeff * pow_rat(p[0], m.i - a0) * pow_rat(p[1], m.j - a1) * pow_rat(p[2], m.k - a2);
}

std::size_t rank_of(std::vector<std::vector<Rational>> m) {
    std::size_t rank = 0;
    std::size_t rows = m.size();
    if (rows == 0) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

const std::array<std::array<Rational, 3>, 5>& base_points() {
    static const std::array<std::array<Rational, 3>, 5> pts = {{{Rational(1), Rational(0), Rational(0)},
                                                                {Rational(0), Rational(1), Rational(0)},
                                                                {Rational(0), Rational(0), Rational(1)},
                                                                {Rational(1), Rational(1), Rational(1)},
                                                                {Rational(1), Rational(2), Rational(3)}}};
    return pts;
}

}  // namespace

std::int64_t h0_interpolation(const DivisorClass& d) {
    if (d.points() != 5) throw std::invalid_argument("interpolation oracle is for n = 5");
    // A positive e_i coefficient is a fixed exceptional component (the class
    // meets e_i negatively); dropping it leaves h^0 unchanged.
    std::vector<std::int64_t> c = d.coeffs();
    for (int i = 1; i <= 5; ++i)
        c[static_cast<std::size_t>(i)] = std::min<std::int64_t>(c[static_cast<std::size_t>(i)], 0);
    std::int64_t a64 = c[0];
    if (a64 < 0) return 0;
    int a = static_cast<int>(a64);
    auto mons = monomials(a);
    std::vector<std::vector<Rational>> rows;
    for (int pi = 0; pi < 5; ++pi) {
        int mult = static_cast<int>(-c[static_cast<std::size_t>(pi + 1)]);
        for (int t = 0; t < mult; ++t)
            for (int a0 = 0; a0 <= t; ++a0)
                for (int a1 = 0; a0 + a1 <= t; ++a1) {
                    int a2 = t - a0 - a1;
                    std::vector<Rational> row;
                    row.reserve(mons.size());
                    for (const auto& m : mons)
                        row.push_back(deriv_at(m, a0, a1, a2, base_points()[static_cast<std::size_t>(pi)]));
                    rows.push_back(std::move(row));
                }
    }
    auto dim = static_cast<std::int64_t>(mons.size()) - static_cast<std::int64_t>(rank_of(std::move(rows)));
    return dim < 0 ? 0 : dim;
}

Ne1eGolden ne1e_bruteforce() {
    Lattice lat(5);
    auto lines = box_lines(5);
    std::set<DivisorClass> corpus;
    corpus.insert(lat.zero());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        corpus.insert(lines[i]);
        for (std::size_t j = i; j < lines.size(); ++j) corpus.insert(lines[i] + lines[j]);
    }
    for (const auto& q : box_conics(5)) corpus.insert(q);
    Ne1eGolden g;
    g.corpus = corpus.size();
    DivisorClass minus_k = -lat.canonical();
    for (const auto& d : corpus) {
        if (h0_interpolation(d) <= 1)
            g.h0_le_1 += 1;
        else if (!effective_by_decomposition(minus_k - d * 2))
            g.residual_not_effective += 1;
        else
            g.violations += 1;
    }
    return g;
}

}  // namespace oracle
