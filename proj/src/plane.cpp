#include "dp4/plane.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace dp4::plane {

HomTriple::HomTriple(Rational a, Rational b, Rational c) : h{std::move(a), std::move(b), std::move(c)} {
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (h[static_cast<std::size_t>(i)] != 0) {
            lead = i;
            break;
        }
    if (lead < 0) throw InputError("homogeneous triple (0, 0, 0) is not a projective element");
    Rational scale = h[static_cast<std::size_t>(lead)];
    for (auto& v : h) v /= scale;
}

std::string HomTriple::str() const {
    std::ostringstream out;
    out << "(" << h[0] << " : " << h[1] << " : " << h[2] << ")";
    return out.str();
}

bool incident(const ProjPoint& p, const ProjLine& line) {
    return p.h[0] * line.h[0] + p.h[1] * line.h[1] + p.h[2] * line.h[2] == 0;
}

namespace {

std::array<Rational, 3> cross(const HomTriple& a, const HomTriple& b) {
    return {a.h[1] * b.h[2] - a.h[2] * b.h[1], a.h[2] * b.h[0] - a.h[0] * b.h[2],
            a.h[0] * b.h[1] - a.h[1] * b.h[0]};
}

}  // namespace

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
    auto c = cross(p, q);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw InputError("join of equal points " + p.str());
    return ProjLine(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
    auto c = cross(a, b);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) throw InputError("meet of equal lines " + a.str());
    return ProjPoint(c[0], c[1], c[2]);
}

Rational det3(const HomTriple& a, const HomTriple& b, const HomTriple& c) {
    return a.h[0] * (b.h[1] * c.h[2] - b.h[2] * c.h[1]) - a.h[1] * (b.h[0] * c.h[2] - b.h[2] * c.h[0]) +
           a.h[2] * (b.h[0] * c.h[1] - b.h[1] * c.h[0]);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    return det3(a, b, c) == 0;
}

bool general_position(const std::array<ProjPoint, 5>& pts) {
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (pts[i] == pts[j])
                throw InputError("duplicate point p" + std::to_string(i + 1) + " = p" +
                                 std::to_string(j + 1) + " = " + pts[i].str());
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (std::size_t k = j + 1; k < 5; ++k)
                if (collinear(pts[i], pts[j], pts[k])) return false;
    return true;
}

BurniatArrangement make_arrangement(const std::array<ProjPoint, 5>& pts) {
    if (!general_position(pts)) throw InputError("arrangement needs five points in general position");
    auto p = [&](int i) -> const ProjPoint& { return pts[static_cast<std::size_t>(i - 1)]; };
    BurniatArrangement arr{pts,
                           {{{"e'1", join(p(2), p(3))},
                             {"e'2", join(p(1), p(3))},
                             {"e'3", join(p(1), p(2))},
                             {"g1", join(p(4), p(1))},
                             {"g2", join(p(4), p(2))},
                             {"g3", join(p(4), p(3))},
                             {"h1", join(p(5), p(1))},
                             {"h2", join(p(5), p(2))},
                             {"h3", join(p(5), p(3))}}}};
    return arr;
}

namespace {

const std::map<std::string, std::set<std::string>>& expected_pencils() {
    static const std::map<std::string, std::set<std::string>> table = {
        {"p1", {"e'2", "e'3", "g1", "h1"}}, {"p2", {"e'1", "e'3", "g2", "h2"}},
        {"p3", {"e'1", "e'2", "g3", "h3"}}, {"p4", {"g1", "g2", "g3"}},
        {"p5", {"h1", "h2", "h3"}},
    };
    return table;
}

}  // namespace

NormalCrossingResult normal_crossing(const BurniatArrangement& arr) {
    NormalCrossingResult res;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            if (arr.lines[i].line == arr.lines[j].line) {
                res.reason = "lines " + arr.lines[i].name + " and " + arr.lines[j].name + " coincide";
                return res;
            }
    // No triple concurrency outside the five points: 84 exact determinants.
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            for (std::size_t k = j + 1; k < 9; ++k) {
                if (det3(arr.lines[i].line, arr.lines[j].line, arr.lines[k].line) != 0) continue;
                ProjPoint common = meet(arr.lines[i].line, arr.lines[j].line);
                bool blown_up = false;
                for (const auto& p : arr.points) blown_up = blown_up || p == common;
                if (!blown_up) {
                    res.reason = "triple concurrency outside the blown-up points";
                    res.witness = ConcurrencyWitness{
                        {arr.lines[i].name, arr.lines[j].name, arr.lines[k].name}, common};
                    return res;
                }
            }
    // Each blown-up point must see exactly its expected pencil, so all strict
    // transforms meet the exceptional curve at distinct points.
    for (int pi = 1; pi <= 5; ++pi) {
        std::set<std::string> through;
        for (const auto& al : arr.lines)
            if (incident(arr.points[static_cast<std::size_t>(pi - 1)], al.line)) through.insert(al.name);
        const auto& expected = expected_pencils().at("p" + std::to_string(pi));
        if (through != expected) {
            std::ostringstream msg;
            msg << "unexpected pencil at p" << pi << ": {";
            for (const auto& n : through) msg << n << " ";
            msg << "}";
            res.reason = msg.str();
            return res;
        }
    }
    res.pass = true;
    return res;
}

DivisorClass class_of_line(const BurniatArrangement& arr, const std::string& name) {
    const ProjLine* line = nullptr;
    for (const auto& al : arr.lines)
        if (al.name == name) line = &al.line;
    if (line == nullptr) throw InputError("unknown arrangement line: " + name);
    Lattice lat(5);
    DivisorClass cls = lat.l();
    for (int i = 1; i <= 5; ++i)
        if (incident(arr.points[static_cast<std::size_t>(i - 1)], *line)) cls = cls - lat.e(i);
    return cls;
}

DivisorClass branch_class(const BurniatArrangement& arr, int i) {
    if (i < 1 || i > 3) throw InputError("branch classes are B_1..B_3");
    Lattice lat(5);
    int next = (i % 3) + 1;
    return lat.e(i) + class_of_line(arr, "e'" + std::to_string(i)) +
           class_of_line(arr, "g" + std::to_string(next)) +
           class_of_line(arr, "h" + std::to_string(next));
}

std::array<ProjPoint, 5> default_points() {
    return {ProjPoint(1, 0, 0), ProjPoint(0, 1, 0), ProjPoint(0, 0, 1), ProjPoint(1, 1, 1),
            ProjPoint(1, 2, 3)};
}

namespace {

Rational parse_rational(const std::string& token) {
    using boost::multiprecision::cpp_int;
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rational(cpp_int(token));
        cpp_int num(token.substr(0, slash));
        cpp_int den(token.substr(slash + 1));
        if (den == 0) throw InputError("zero denominator in \"" + token + "\"");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw InputError("cannot parse rational \"" + token + "\": " + e.what());
    }
}

}  // namespace

std::array<ProjPoint, 5> parse_points(std::istream& in) {
    std::vector<ProjPoint> pts;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (row >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        if (tokens.size() != 3) throw InputError("expected three coordinates per point, got: " + line);
        if (pts.size() == 5) throw InputError("more than five points in input");
        pts.emplace_back(parse_rational(tokens[0]), parse_rational(tokens[1]), parse_rational(tokens[2]));
    }
    if (pts.size() != 5)
        throw InputError("expected exactly five points, got " + std::to_string(pts.size()));
    return {pts[0], pts[1], pts[2], pts[3], pts[4]};
}

std::array<ProjPoint, 5> load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open points file: " + path);
    return parse_points(in);
}

std::array<ProjPoint, 5> random_points(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> coord(lo, hi);
    auto draw = [&]() {
        for (;;) {
            std::int64_t a = coord(rng), b = coord(rng), c = coord(rng);
            if (a != 0 || b != 0 || c != 0) return ProjPoint(a, b, c);
        }
    };
    return {draw(), draw(), draw(), draw(), draw()};
}

}  // namespace dp4::plane
