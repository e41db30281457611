#include "dp4/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace dp4 {

LatticeAutomorphism LatticeAutomorphism::identity(int n_points) {
    int r = n_points + 1;
    std::vector<std::int64_t> m(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(i)] = 1;
    return LatticeAutomorphism(r, std::move(m));
}

DivisorClass LatticeAutomorphism::apply(const DivisorClass& d) const {
    if (d.rank() != rank_)
        throw LatticeMismatchError("automorphism of rank " + std::to_string(rank_) +
                                   " applied to class of rank " + std::to_string(d.rank()));
    std::vector<std::int64_t> out(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < rank_; ++j) acc = checked_add(acc, checked_mul(at(i, j), d[j]));
        out[static_cast<std::size_t>(i)] = acc;
    }
    return DivisorClass(std::move(out));
}

LatticeAutomorphism LatticeAutomorphism::operator*(const LatticeAutomorphism& o) const {
    if (rank_ != o.rank_) throw LatticeMismatchError("composing automorphisms of different rank");
    std::vector<std::int64_t> m(static_cast<std::size_t>(rank_) * static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < rank_; ++k) acc = checked_add(acc, checked_mul(at(i, k), o.at(k, j)));
            m[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j)] = acc;
        }
    return LatticeAutomorphism(rank_, std::move(m));
}

bool LatticeAutomorphism::preserves_form() const {
    Lattice lat(points());
    std::vector<DivisorClass> basis;
    basis.push_back(lat.l());
    for (int i = 1; i <= lat.n; ++i) basis.push_back(lat.e(i));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (intersect(apply(basis[i]), apply(basis[j])) != intersect(basis[i], basis[j]))
                return false;
    return true;
}

bool LatticeAutomorphism::fixes_canonical() const {
    Lattice lat(points());
    return apply(lat.canonical()) == lat.canonical();
}

LatticeAutomorphism reflection(const DivisorClass& root) {
    Lattice lat(root.points());
    if (self_intersection(root) != -2 || intersect(root, lat.canonical()) != 0)
        throw NotARootError("reflection requires r^2 = -2 and r.K = 0, got " + root.str());
    int r = root.rank();
    std::vector<std::int64_t> m(static_cast<std::size_t>(r) * static_cast<std::size_t>(r), 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            std::int64_t sign = (j == 0) ? 1 : -1;  // diag(+1, -1, ..., -1)
            std::int64_t v = checked_mul(root[i], checked_mul(sign, root[j]));
            if (i == j) v = checked_add(v, 1);
            m[static_cast<std::size_t>(i) * static_cast<std::size_t>(r) + static_cast<std::size_t>(j)] = v;
        }
    return LatticeAutomorphism(r, std::move(m));
}

std::vector<DivisorClass> cremona_roots(const Lattice& lat) {
    std::vector<DivisorClass> out;
    for (int i = 1; i <= lat.n; ++i)
        for (int j = i + 1; j <= lat.n; ++j)
            for (int k = j + 1; k <= lat.n; ++k) out.push_back(lat.l() - lat.e(i) - lat.e(j) - lat.e(k));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DivisorClass> orbit(const DivisorClass& start,
                                const std::vector<LatticeAutomorphism>& generators, std::size_t cap) {
    std::set<DivisorClass> seen{start};
    std::deque<DivisorClass> queue{start};
    while (!queue.empty()) {
        DivisorClass cur = queue.front();
        queue.pop_front();
        for (const auto& g : generators) {
            DivisorClass next = g.apply(cur);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw OrbitCapError("orbit exceeded cap of " + std::to_string(cap) + " elements");
                queue.push_back(next);
            }
        }
    }
    return std::vector<DivisorClass>(seen.begin(), seen.end());
}

CremonaWitness cremona_witness(const NamedLine& line) {
    const DivisorClass& c = line.cls;
    if (c.points() != 5) throw UnsupportedRankError("cremona_witness works on the n = 5 lattice");
    Lattice lat(5);
    if (self_intersection(c) != -1 || intersect(c, lat.canonical()) != -1)
        throw InputError("cremona_witness needs a (-1)-class, got " + c.str());
    std::set<DivisorClass> exceptional;
    for (int i = 1; i <= 5; ++i) exceptional.insert(lat.e(i));
    if (exceptional.count(c)) throw InputError(c.str() + " is already exceptional");
    if (c == lat.l() * 2 - lat.e(1) - lat.e(2) - lat.e(3) - lat.e(4) - lat.e(5))
        throw InputError("delta is excluded from the Cremona reduction");
    for (const auto& root : cremona_roots(lat)) {
        LatticeAutomorphism w = reflection(root);
        DivisorClass image = w.apply(c);
        if (exceptional.count(image)) return CremonaWitness{root, image, w};
    }
    throw SearchFailureError("no single Cremona reflection sends " + c.str() +
                             " to an exceptional class; try composing two reflections");
}

}  // namespace dp4
