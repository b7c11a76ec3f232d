#include "whl/newton.hpp"

#include <algorithm>

#include "whl/hermite.hpp"
#include "whl/padic.hpp"

namespace whl {

namespace {

Rat make_slope(long dy, long dx) {
    Rat s{Int(dy), Int(dx)};
    s.canonicalize();
    return s;
}

// cross(o->a, o->b) <= 0 means a lies on or below segment o->b turnwise;
// used to keep the hull lower-convex.
long long cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

} // namespace

NewtonPolygon build_polygon(const IntPoly& g, unsigned long p) {
    if (g.is_zero() || g.coeff(0) == 0)
        throw NonzeroConstantRequired("Newton polygon needs a nonzero constant term");
    if (!is_prime(p)) throw NotPrime("Newton polygon requires a prime");
    NewtonPolygon polygon;
    polygon.prime = p;
    const long n = g.degree();
    for (long j = 0; j <= n; ++j) {
        const Int& a = g.coeff(static_cast<std::size_t>(n - j));
        if (a == 0) continue;
        polygon.points.push_back({j, nu(a, p)});
    }
    // Monotone chain over points already sorted by x; keep the lower hull.
    std::vector<PolygonPoint> hull;
    for (const PolygonPoint& pt : polygon.points) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
            hull.pop_back();
        hull.push_back(pt);
    }
    polygon.vertices = std::move(hull);
    for (std::size_t i = 1; i < polygon.vertices.size(); ++i) {
        long dx = polygon.vertices[i].x - polygon.vertices[i - 1].x;
        long dy = polygon.vertices[i].y - polygon.vertices[i - 1].y;
        polygon.edges.push_back({dx, dy, make_slope(dy, dx)});
    }
    return polygon;
}

Rat rightmost_slope(const NewtonPolygon& polygon) {
    if (polygon.edges.empty()) throw NoEdges("polygon of a constant has no edges");
    return polygon.edges.back().slope;
}

std::optional<SlopeBound> slope_bound(const Partition& lambda, unsigned long p) {
    if (!is_prime(p)) throw NotPrime("slope bound requires a prime");
    const unsigned long s = core_size(lambda);
    // s = m(m+1)/2
    unsigned long m = 0;
    while (m * (m + 1) / 2 < s) ++m;
    if (p <= 2 || (m >= 1 && p <= 2 * m - 1)) return std::nullopt;

    const TwoDecomposition d = two_decompose(lambda);
    auto delta_ok = [&](const Partition& q) {
        const DegreeSequence dq = degree_sequence(q);
        for (std::size_t j = 1; j < dq.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                if ((dq[j] - dq[i]) % p == 0) return false;
        return true;
    };
    if (!delta_ok(d.quotient0) || !delta_ok(d.quotient1)) return std::nullopt;

    SlopeBound b;
    if (m == 0) {
        b.bound = make_slope(1, static_cast<long>(p) - 1);
        b.strict = true;
        if (lambda.size() < p * p) b.refined = make_slope(1, static_cast<long>(p));
    } else {
        b.bound = make_slope(1, static_cast<long>(p) - (2 * static_cast<long>(m) - 1));
        b.strict = false;
    }
    return b;
}

std::optional<ExclusionCertificate> filaseta_exclude(const IntPoly& g, unsigned long p,
                                                     long ell, long k) {
    if (k <= ell || ell < 0) return std::nullopt;
    if (g.is_zero() || g.coeff(0) == 0) return std::nullopt;
    const long n = g.degree();
    if (mpz_fdiv_ui(g.leading().get_mpz_t(), p) == 0) return std::nullopt;
    for (long j = 0; j <= n - ell - 1; ++j)
        if (mpz_fdiv_ui(g.coeff(static_cast<std::size_t>(j)).get_mpz_t(), p) != 0)
            return std::nullopt;
    const NewtonPolygon polygon = build_polygon(g, p);
    if (polygon.edges.empty()) return std::nullopt;
    if (!(rightmost_slope(polygon) < make_slope(1, k))) return std::nullopt;
    return ExclusionCertificate{p, ell, k};
}

bool dumas_decomposition_check(const IntPoly& f, const IntPoly& g, unsigned long p) {
    if (f.is_zero() || g.is_zero() || f.coeff(0) * g.coeff(0) == 0)
        throw NonzeroConstantRequired("Dumas check needs nonzero constant terms");
    const NewtonPolygon pf = build_polygon(f, p);
    const NewtonPolygon pg = build_polygon(g, p);
    const NewtonPolygon pfg = build_polygon(f * g, p);

    std::vector<PolygonEdge> merged;
    merged.insert(merged.end(), pf.edges.begin(), pf.edges.end());
    merged.insert(merged.end(), pg.edges.begin(), pg.edges.end());
    std::stable_sort(merged.begin(), merged.end(),
                     [](const PolygonEdge& a, const PolygonEdge& b) {
                         return a.slope < b.slope;
                     });
    // Walk the merged path from (0, nu_p(lc(fg))) and compare the vertex set
    // after fusing collinear steps.
    std::vector<PolygonPoint> path;
    path.push_back({0, nu(f.leading() * g.leading(), p)});
    for (const PolygonEdge& e : merged) {
        PolygonPoint last = path.back();
        PolygonPoint next{last.x + e.dx, last.y + e.dy};
        if (path.size() >= 2) {
            const PolygonPoint& prev = path[path.size() - 2];
            if (cross(prev, last, next) == 0) {
                path.back() = next;
                continue;
            }
        }
        path.push_back(next);
    }
    return path == pfg.vertices;
}

Rat slope_for_three(unsigned long n) {
    if (n < 3 || n % 2 == 0)
        throw DomainError("the p=3 dichotomy is stated for odd n >= 3");
    const Partition lambda({static_cast<unsigned>(n), 2});
    const IntPoly r = remainder_poly(lambda);
    const Rat slope = rightmost_slope(build_polygon(r, 3));
    const Rat half = make_slope(1, 2);
    const bool divisible = (n + 1) % 3 == 0;
    if (divisible && !(slope < half))
        throw InternalError("slope dichotomy failed: expected < 1/2");
    if (!divisible && slope != half)
        throw InternalError("slope dichotomy failed: expected = 1/2");
    return slope;
}

} // namespace whl
