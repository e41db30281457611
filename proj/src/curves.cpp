#include "dp4/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace dp4 {

namespace {

std::int64_t isqrt_floor(std::int64_t v) {
    if (v < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

// Integer vectors b_1..b_n with sum = s and sum of squares = q, by DFS with
// Cauchy-Schwarz pruning: a feasible tail needs s^2 <= r*q over r slots.
void fill_tail(std::vector<std::int64_t>& b, std::size_t pos, std::int64_t s, std::int64_t q,
               std::vector<std::vector<std::int64_t>>& out) {
    std::size_t r = b.size() - pos;
    if (r == 0) {
        if (s == 0 && q == 0) out.push_back(b);
        return;
    }
    if (q < 0) return;
    if (s * s > static_cast<std::int64_t>(r) * q) return;
    std::int64_t bound = isqrt_floor(q);
    for (std::int64_t v = -bound; v <= bound; ++v) {
        b[pos] = v;
        fill_tail(b, pos + 1, s - v, q - v * v, out);
    }
    b[pos] = 0;
}

// All D = (a, b_1..b_n) with D^2 = self and D.K = deg_k. The ambient form
// gives sum b_i = -deg_k - 3a and sum b_i^2 = a^2 - self; Cauchy-Schwarz on
// those two equations bounds |a| by 16 for every n <= 8 (lines: a <= 7 at
// n = 8; roots: |a| <= 4; conic classes: a <= 11), so scanning a in that
// window is exhaustive.
std::vector<DivisorClass> solve_quadric(const Lattice& lat, std::int64_t self, std::int64_t deg_k) {
    if (lat.n > 8)
        throw UnsupportedRankError("enumeration is finite only for n <= 8 blown-up points, got n = " +
                                   std::to_string(lat.n));
    std::vector<DivisorClass> found;
    const std::int64_t a_window = 16;
    for (std::int64_t a = -a_window; a <= a_window; ++a) {
        std::int64_t s1 = -deg_k - 3 * a;   // required sum of b_i
        std::int64_t s2 = a * a - self;     // required sum of b_i^2
        if (s2 < 0) continue;
        if (lat.n == 0) {
            if (s1 == 0 && s2 == 0) found.push_back(DivisorClass({a}));
            continue;
        }
        if (s1 * s1 > static_cast<std::int64_t>(lat.n) * s2) continue;
        std::vector<std::int64_t> b(static_cast<std::size_t>(lat.n), 0);
        std::vector<std::vector<std::int64_t>> tails;
        fill_tail(b, 0, s1, s2, tails);
        for (auto& t : tails) {
            std::vector<std::int64_t> c;
            c.reserve(t.size() + 1);
            c.push_back(a);
            c.insert(c.end(), t.begin(), t.end());
            found.emplace_back(std::move(c));
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool is_primitive(const DivisorClass& d) {
    std::int64_t g = 0;
    for (int i = 0; i < d.rank(); ++i) g = std::gcd(g, d[i]);
    return g == 1;
}

}  // namespace

std::string line_name(const DivisorClass& cls) {
    if (cls.points() == 5) {
        // e_i
        for (int i = 1; i <= 5; ++i) {
            Lattice lat(5);
            if (cls == lat.e(i)) return "e" + std::to_string(i);
        }
        if (cls.l_coeff() == 1) {
            std::vector<int> hit;
            for (int i = 1; i <= 5; ++i)
                if (cls.e_coeff(i) == -1) hit.push_back(i);
            if (hit.size() == 2) {
                int a = hit[0], b = hit[1];
                if (a <= 3 && b <= 3) return "e'" + std::to_string(6 - a - b);
                if (b == 4) return "g" + std::to_string(a);
                if (b == 5 && a <= 3) return "h" + std::to_string(a);
                if (a == 4 && b == 5) return "gamma";
            }
        }
        if (cls.l_coeff() == 2) {
            bool all = true;
            for (int i = 1; i <= 5; ++i) all = all && cls.e_coeff(i) == -1;
            if (all) return "delta";
        }
    }
    return cls.str();
}

DivisorClass named_line(const std::string& name) {
    Lattice lat(5);
    for (const auto& ln : enumerate_lines(lat))
        if (ln.name == name) return ln.cls;
    throw InputError("unknown line name: " + name);
}

std::vector<NamedLine> enumerate_lines(const Lattice& lat) {
    std::vector<NamedLine> out;
    for (auto& d : solve_quadric(lat, -1, -1)) {
        if (d.l_coeff() < 0) continue;
        out.push_back(NamedLine{d, line_name(d)});
    }
    return out;
}

std::vector<DivisorClass> enumerate_roots(const Lattice& lat) { return solve_quadric(lat, -2, 0); }

std::vector<DivisorClass> positive_roots(const Lattice& lat) {
    std::vector<DivisorClass> out;
    for (auto& r : enumerate_roots(lat)) {
        std::int64_t lead = 0;
        for (int i = 0; i < r.rank() && lead == 0; ++i) lead = r[i];
        if (lead > 0) out.push_back(r);
    }
    return out;
}

std::vector<DivisorClass> enumerate_conic_classes(const Lattice& lat) {
    std::vector<DivisorClass> out;
    for (auto& d : solve_quadric(lat, 0, -2)) {
        if (d.l_coeff() < 0) continue;
        if (!is_primitive(d)) continue;
        out.push_back(d);
    }
    return out;
}

std::string format_line_table(const std::vector<NamedLine>& lines) {
    std::ostringstream out;
    for (const auto& ln : lines) {
        out << ln.name;
        for (std::size_t pad = ln.name.size(); pad < 8; ++pad) out << ' ';
        for (int i = 0; i < ln.cls.rank(); ++i) out << ' ' << ln.cls[i];
        out << " :";
        for (const auto& other : lines) out << ' ' << intersect(ln.cls, other.cls);
        out << '\n';
    }
    return out.str();
}

}  // namespace dp4
