#ifndef WHL_NEWTON_HPP
#define WHL_NEWTON_HPP

#include <optional>
#include <vector>

#include "whl/ints.hpp"
#include "whl/partition.hpp"
#include "whl/poly.hpp"

namespace whl {

struct PolygonPoint {
    long x = 0;  // j, counting from the leading coefficient
    long y = 0;  // nu_p(a_{n-j})
    friend bool operator==(const PolygonPoint&, const PolygonPoint&) = default;
};

struct PolygonEdge {
    long dx = 0;
    long dy = 0;
    Rat slope;
    friend bool operator==(const PolygonEdge&, const PolygonEdge&) = default;
};

struct NewtonPolygon {
    unsigned long prime = 0;
    std::vector<PolygonPoint> points;    // finite-valuation points, increasing x
    std::vector<PolygonPoint> vertices;  // lower convex hull
    std::vector<PolygonEdge> edges;      // slopes weakly increasing
};

/// Newton polygon of g with respect to p. Requires g(0) != 0
/// (NonzeroConstantRequired). Zero coefficients are omitted from the point
/// set; their infinite valuation never touches a lower hull.
NewtonPolygon build_polygon(const IntPoly& g, unsigned long p);

/// Slope of the right-most (maximal-slope) edge. Throws NoEdges for constants.
Rat rightmost_slope(const NewtonPolygon& polygon);

struct SlopeBound {
    Rat bound;                  // slope < bound (strict) or <= bound
    bool strict = false;
    std::optional<Rat> refined; // m = 0 and n < p^2: slope <= 1/p additionally
};

/// Theorem-level bound for the right-most slope of the polygon of R_lambda
/// with respect to p; nullopt when the hypotheses fail. Applicability uses the
/// relaxed condition p not dividing Delta(n_{pi_0}) Delta(n_{pi_1}).
std::optional<SlopeBound> slope_bound(const Partition& lambda, unsigned long p);

struct ExclusionCertificate {
    unsigned long prime = 0;
    long ell = 0;
    long k = 0;  // no factor with degree in [ell+1, k]
};

/// Certifies that G has no factor with degree in [ell+1, k]: requires
/// p coprime to the leading coefficient, p | a_j for all j <= n-ell-1, and
/// right-most slope < 1/k. nullopt when any precondition fails.
std::optional<ExclusionCertificate> filaseta_exclude(const IntPoly& g, unsigned long p,
                                                     long ell, long k);

/// Checks that the polygon of f*g is the increasing-slope merge of the edges
/// of the polygons of f and g.
bool dumas_decomposition_check(const IntPoly& f, const IntPoly& g, unsigned long p);

/// Right-most slope of R_{(n,2)} at p = 3 for odd n >= 3; asserted to be
/// < 1/2 exactly when 3 | n+1 and = 1/2 otherwise.
Rat slope_for_three(unsigned long n);

} // namespace whl

#endif
