#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <limits>
#include <random>

#include "dp4/lattice.hpp"

using namespace dp4;

namespace {

DivisorClass random_class(std::mt19937_64& rng, int n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> coeff(lo, hi);
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
    for (auto& v : c) v = coeff(rng);
    return DivisorClass(std::move(c));
}

}  // namespace

TEST_CASE("intersection form on the basis") {
    Lattice lat(5);
    CHECK(intersect(lat.l(), lat.l()) == 1);
    CHECK(intersect(lat.e(1), lat.e(2)) == 0);
    CHECK(intersect(lat.e(1), lat.e(1)) == -1);
    CHECK(intersect(lat.l(), lat.e(3)) == 0);
}

TEST_CASE("anticanonical degree-4 embedding class") {
    Lattice lat(5);
    DivisorClass mk = -lat.canonical();
    CHECK(mk == DivisorClass({3, -1, -1, -1, -1, -1}));
    CHECK(self_intersection(mk) == 4);
}

TEST_CASE("canonical class per rank") {
    CHECK(Lattice(5).canonical() == DivisorClass({-3, 1, 1, 1, 1, 1}));
    CHECK(Lattice(0).canonical() == DivisorClass({-3}));
    CHECK(self_intersection(Lattice(5).canonical()) == 4);
    CHECK(self_intersection(Lattice(8).canonical()) == 1);
}

TEST_CASE("riemann-roch chi values") {
    Lattice lat(5);
    CHECK(rr_chi(lat.zero()) == 1);
    CHECK(rr_chi(-lat.canonical()) == 5);
    CHECK(rr_chi(lat.l() * 3 - lat.e(1) - lat.e(2) - lat.e(3)) == 7);
    CHECK(rr_chi(lat.l()) == 3);
}

TEST_CASE("adjunction genus") {
    Lattice lat(5);
    CHECK(arith_genus(lat.e(1)) == 0);
    CHECK(arith_genus(lat.l() - lat.e(1)) == 0);
    CHECK(arith_genus(lat.l()) == 0);
    CHECK(arith_genus(-lat.canonical()) == 1);  // elliptic anticanonical curve
}

TEST_CASE("rank mismatch is an error") {
    Lattice a(5), b(4);
    CHECK_THROWS_AS(intersect(a.l(), b.l()), LatticeMismatchError);
    CHECK_THROWS_AS(a.l() + b.l(), LatticeMismatchError);
}

TEST_CASE("serre symmetry chi(D) = chi(K-D) on random classes") {
    std::mt19937_64 rng(20240901);
    for (int n : {3, 5, 8}) {
        Lattice lat(n);
        for (int trial = 0; trial < 2000; ++trial) {
            DivisorClass d = random_class(rng, n, -50, 50);
            CHECK(rr_chi(d) == rr_chi(lat.canonical() - d));
        }
    }
}

TEST_CASE("bilinearity on random triples") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        DivisorClass a = random_class(rng, 5, -40, 40);
        DivisorClass b = random_class(rng, 5, -40, 40);
        DivisorClass c = random_class(rng, 5, -40, 40);
        CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    }
}

TEST_CASE("signature: exactly one positive eigenvalue on the diagonal form") {
    Lattice lat(7);
    std::vector<DivisorClass> basis{lat.l()};
    for (int i = 1; i <= 7; ++i) basis.push_back(lat.e(i));
    int positive = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            std::int64_t v = intersect(basis[i], basis[j]);
            if (i != j) CHECK(v == 0);  // diagonal form, Sylvester reads off the signature
        }
        if (intersect(basis[i], basis[i]) > 0) ++positive;
    }
    CHECK(positive == 1);
}

TEST_CASE("overflow is loud") {
    std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2 + 7;
    DivisorClass d({big, big});
    CHECK_THROWS_AS(intersect(d, d), OverflowError);
    CHECK_THROWS_AS(d + d, OverflowError);
    CHECK_THROWS_AS(d * 4, OverflowError);
}

TEST_CASE("pretty printing") {
    Lattice lat(5);
    CHECK(lat.zero().str() == "0");
    CHECK((lat.l() - lat.e(4) - lat.e(5)).str() == "l-e4-e5");
    CHECK(lat.canonical().str() == "-3l+e1+e2+e3+e4+e5");
    CHECK((lat.e(2) * 2).str() == "2e2");
}

TEST_CASE("immutability via value semantics") {
    Lattice lat(5);
    DivisorClass a = lat.l();
    DivisorClass b = a + lat.e(1);
    CHECK(a == lat.l());
    CHECK(b != a);
}
