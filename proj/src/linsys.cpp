#include "dp4/linsys.hpp"

#include <algorithm>
#include <set>

namespace dp4 {

namespace {

const std::vector<NamedLine>& canonical_lines() {
    static const std::vector<NamedLine> lines = enumerate_lines(Lattice(5));
    return lines;
}

void require_dp4(const DivisorClass& d) {
    if (d.points() != 5)
        throw UnsupportedRankError("linear-system routines are specific to the n = 5 lattice, got n = " +
                                   std::to_string(d.points()));
}

}  // namespace

H0Result h0_with_lines(const DivisorClass& d, const std::vector<NamedLine>& lines) {
    require_dp4(d);
    DivisorClass cur = d;
    std::vector<PeelStep> trace;
    for (;;) {
        if (anticanonical_degree(cur) < 0) return H0Result{0, std::move(trace), cur, false};
        const NamedLine* fixed = nullptr;
        for (const auto& ln : lines) {
            if (intersect(cur, ln.cls) < 0) {
                fixed = &ln;
                break;
            }
        }
        if (fixed == nullptr) break;  // nef
        cur = cur - fixed->cls;
        if (!trace.empty() && trace.back().line == fixed->cls)
            trace.back().multiplicity += 1;
        else
            trace.push_back(PeelStep{fixed->cls, 1});
    }
    if (cur.is_zero()) return H0Result{1, std::move(trace), cur, true};
    std::int64_t deg = anticanonical_degree(cur);
    if (deg > 0) return H0Result{rr_chi(cur), std::move(trace), cur, true};
    // A nonzero nef class of degree 0 cannot exist while -K is ample.
    throw Error("peeling reached a nonzero nef class of anticanonical degree 0: " + cur.str());
}

H0Result h0(const DivisorClass& d) { return h0_with_lines(d, canonical_lines()); }

bool is_effective(const DivisorClass& d) { return h0(d).effective; }

std::vector<DivisorClass> ne1e_corpus() {
    Lattice lat(5);
    const auto& lines = canonical_lines();
    std::set<DivisorClass> corpus;
    corpus.insert(lat.zero());
    for (const auto& a : lines) {
        corpus.insert(a.cls);
        for (const auto& b : lines) corpus.insert(a.cls + b.cls);
    }
    for (const auto& c : enumerate_conic_classes(lat)) corpus.insert(c);
    return std::vector<DivisorClass>(corpus.begin(), corpus.end());
}

Ne1eOutcome ne1e_search() {
    Lattice lat(5);
    DivisorClass minus_k = -lat.canonical();
    Ne1eOutcome out;
    out.corpus = ne1e_corpus();
    for (const auto& d : out.corpus) {
        if (h0(d).value <= 1) {
            out.rejected_h0 += 1;
        } else if (!is_effective(minus_k - d * 2)) {
            out.rejected_residual += 1;
        } else {
            out.violations.push_back(d);
        }
    }
    return out;
}

}  // namespace dp4
