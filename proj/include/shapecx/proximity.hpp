/**
 * Feature descriptions of triangles and the four nearness relations on
 * subcomplexes.
 *
 *   near                ... closures share a simplex of any dimension
 *   strongly_near       ... a shared filled triangle (singletons below)
 *   descriptively_near  ... some triangle of either side matches a
 *                           description present on both sides
 *   strongly_descriptively_near ... the same, over interior triangle sets
 *
 * Point singletons are modeled as single-vertex subcomplexes.  For those,
 * strongly_near({x}, B) holds iff x is an interior vertex of B, and
 * {x} strongly_near {y} iff x = y; both clauses apply only when a side has
 * no triangles at all, so for triangle-bearing operands the relation is
 * exactly "shared triangle".
 *
 * Description equality is quantized: each feature value is rounded to the
 * grid of multiples of cfg.quantum and two descriptions are equal iff all
 * grid indices agree.  Grid equality is transitive, which real-valued
 * near-equality is not; that keeps the descriptive intersection a genuine
 * set.  Area and centroid features are quantized in exact arithmetic;
 * perimeter and min-angle go through double precision deterministically.
 */

#ifndef SHAPECX_PROXIMITY_HPP
#define SHAPECX_PROXIMITY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "shapecx/complex.hpp"

namespace shapecx {

enum class Feature { AREA, PERIMETER, CENTROID_X, CENTROID_Y, MIN_ANGLE };

inline const char* to_string(Feature f)
{
    switch (f) {
        case Feature::AREA:       return "area";
        case Feature::PERIMETER:  return "perimeter";
        case Feature::CENTROID_X: return "centroid_x";
        case Feature::CENTROID_Y: return "centroid_y";
        case Feature::MIN_ANGLE:  return "min_angle";
    }
    return "area";
}

inline Feature parse_feature(const std::string& name)
{
    if (name == "area")
        return Feature::AREA;
    if (name == "perimeter")
        return Feature::PERIMETER;
    if (name == "centroid_x")
        return Feature::CENTROID_X;
    if (name == "centroid_y")
        return Feature::CENTROID_Y;
    if (name == "min_angle")
        return Feature::MIN_ANGLE;
    throw Error(ErrorCode::SCHEMA_ERROR, "unknown feature \"" + name + "\"");
}

enum class Relation { NEAR, STRONGLY_NEAR, DESCRIPTIVELY_NEAR,
                      STRONGLY_DESCRIPTIVELY_NEAR };

struct ProximityConfig {
    std::vector<Feature> features{Feature::AREA};
    Rational             quantum{1, 1000000000};
    std::set<Relation>   relationset{Relation::NEAR, Relation::STRONGLY_NEAR,
                                     Relation::DESCRIPTIVELY_NEAR,
                                     Relation::STRONGLY_DESCRIPTIVELY_NEAR};
};

/** Default quantum: 1e-9 of the squared bounding-box diagonal of the host,
 *  so descriptions stay scale-aware. */
inline ProximityConfig default_config(const SimplicialComplex& cx)
{
    ProximityConfig cfg;
    if (!cx.vertices.empty()) {
        Rational minx = cx.vertices[0].x, maxx = minx;
        Rational miny = cx.vertices[0].y, maxy = miny;
        for (const Point2& p : cx.vertices) {
            minx = std::min(minx, p.x);
            maxx = std::max(maxx, p.x);
            miny = std::min(miny, p.y);
            maxy = std::max(maxy, p.y);
        }
        Rational diag2 = (maxx - minx) * (maxx - minx)
                       + (maxy - miny) * (maxy - miny);
        if (diag2 > 0)
            cfg.quantum = diag2 / 1000000000;
    }
    return cfg;
}

struct FeatureVector {
    std::vector<double>       values;   // informational, not compared
    std::vector<std::int64_t> grid;     // quantized indices; the identity

    friend bool operator==(const FeatureVector& a, const FeatureVector& b)
    {
        return a.grid == b.grid;
    }
    friend bool operator<(const FeatureVector& a, const FeatureVector& b)
    {
        return a.grid < b.grid;
    }
};

namespace detail {

inline std::int64_t quantize_exact(const Rational& v, const Rational& quantum)
{
    Rational idx = v / quantum;
    BigInt   f   = rational_floor(idx);
    Rational rem = idx - Rational(f);
    if (rem > Rational(1, 2) || (rem == Rational(1, 2) && (f % 2) != 0))
        ++f;
    if (f > std::numeric_limits<std::int64_t>::max()
        || f < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                    "feature value overflows the quantum grid");
    return f.convert_to<std::int64_t>();
}

inline std::int64_t quantize_double(double v, double quantum)
{
    // nearbyint under the default rounding mode = round half to even,
    // matching quantize_exact.
    return static_cast<std::int64_t>(std::nearbyint(v / quantum));
}

}   // namespace detail

/**
 * Description of one triangle under the configured features, in order.
 * Deterministic; degenerate triangles have no description.
 */
inline FeatureVector describe(const Triangle2& t, const ProximityConfig& cfg)
{
    Rational area = triangle_area(t);
    if (area == 0)
        throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                    "degenerate triangle has no description");

    const double quantum_d = to_double(cfg.quantum);
    FeatureVector out;
    for (Feature f : cfg.features) {
        switch (f) {
            case Feature::AREA: {
                out.values.push_back(to_double(area));
                out.grid.push_back(detail::quantize_exact(area, cfg.quantum));
                break;
            }
            case Feature::CENTROID_X:
            case Feature::CENTROID_Y: {
                Point2   c = triangle_centroid(t);
                Rational v = f == Feature::CENTROID_X ? c.x : c.y;
                out.values.push_back(to_double(v));
                out.grid.push_back(detail::quantize_exact(v, cfg.quantum));
                break;
            }
            case Feature::PERIMETER: {
                double p = std::sqrt(to_double(squared_distance(t.a, t.b)))
                         + std::sqrt(to_double(squared_distance(t.b, t.c)))
                         + std::sqrt(to_double(squared_distance(t.c, t.a)));
                out.values.push_back(p);
                out.grid.push_back(detail::quantize_double(p, quantum_d));
                break;
            }
            case Feature::MIN_ANGLE: {
                auto angle_at = [](const Point2& v, const Point2& p,
                                   const Point2& q) {
                    double ux = to_double(p.x - v.x), uy = to_double(p.y - v.y);
                    double wx = to_double(q.x - v.x), wy = to_double(q.y - v.y);
                    double cosv = (ux * wx + uy * wy)
                                / (std::sqrt(ux * ux + uy * uy)
                                   * std::sqrt(wx * wx + wy * wy));
                    cosv = std::min(1.0, std::max(-1.0, cosv));
                    return std::acos(cosv);
                };
                double m = std::min({angle_at(t.a, t.b, t.c),
                                     angle_at(t.b, t.c, t.a),
                                     angle_at(t.c, t.a, t.b)});
                out.values.push_back(m);
                out.grid.push_back(detail::quantize_double(m, quantum_d));
                break;
            }
        }
    }
    return out;
}

/** Description set of a triangle id set within one host. */
inline std::set<FeatureVector> describe_set(const SimplicialComplex& host,
                                            const std::set<int>& triangle_ids,
                                            const ProximityConfig& cfg)
{
    std::set<FeatureVector> out;
    for (int t : triangle_ids)
        out.insert(describe(host.triangle_geometry(t), cfg));
    return out;
}

/** Closures share at least one simplex of any dimension. */
inline bool near(const SubComplex& a, const SubComplex& b)
{
    require_same_host(a, b);
    return intersects(sub_closure(a), sub_closure(b));
}

namespace detail {

inline bool pure_singleton(const SubComplex& s)
{
    return s.triangle_ids.empty() && s.vertex_ids.size() == 1;
}

inline bool singleton_strongly_near(const SubComplex& point,
                                    const SubComplex& other)
{
    int x = *point.vertex_ids.begin();
    if (pure_singleton(other))
        return x == *other.vertex_ids.begin();
    return sub_interior(other).vertices.count(x) > 0;
}

}   // namespace detail

/**
 * Shared filled triangle; overlapping 2-dimensional interiors.  For point
 * singletons: {x} is strongly near a triangle-bearing B iff x is an
 * interior vertex of B, and strongly near {y} iff x = y.
 */
inline bool strongly_near(const SubComplex& a, const SubComplex& b)
{
    require_same_host(a, b);
    auto it = a.triangle_ids.begin();
    auto jt = b.triangle_ids.begin();
    while (it != a.triangle_ids.end() && jt != b.triangle_ids.end()) {
        if (*it < *jt)
            ++it;
        else if (*jt < *it)
            ++jt;
        else
            return true;
    }
    if (detail::pure_singleton(a) && detail::singleton_strongly_near(a, b))
        return true;
    if (detail::pure_singleton(b) && detail::singleton_strongly_near(b, a))
        return true;
    return false;
}

namespace detail {

/** Triangles of either id set whose description occurs in both. */
inline std::set<int> descriptive_match(const SimplicialComplex& host,
                                       const std::set<int>& tris_a,
                                       const std::set<int>& tris_b,
                                       const ProximityConfig& cfg)
{
    std::set<FeatureVector> phi_a = describe_set(host, tris_a, cfg);
    std::set<FeatureVector> phi_b = describe_set(host, tris_b, cfg);

    std::set<int> out;
    auto collect = [&](const std::set<int>& tris) {
        for (int t : tris) {
            FeatureVector d = describe(host.triangle_geometry(t), cfg);
            if (phi_a.count(d) && phi_b.count(d))
                out.insert(t);
        }
    };
    collect(tris_a);
    collect(tris_b);
    return out;
}

}   // namespace detail

/**
 * Descriptive intersection: all triangles of A union B whose description
 * is description-equal to some triangle of A and to some triangle of B.
 */
inline std::set<int> descriptive_intersection(const SubComplex& a,
                                              const SubComplex& b,
                                              const ProximityConfig& cfg)
{
    require_same_host(a, b);
    return detail::descriptive_match(*a.host, a.triangle_ids, b.triangle_ids,
                                     cfg);
}

inline bool descriptively_near(const SubComplex& a, const SubComplex& b,
                               const ProximityConfig& cfg)
{
    return !descriptive_intersection(a, b, cfg).empty();
}

/**
 * Nonempty descriptive intersection of the interior triangle sets.  Every
 * triangle of a subcomplex is interior to it, so for these operands the
 * interior triangle set is the triangle set itself.
 */
inline bool strongly_descriptively_near(const SubComplex& a,
                                        const SubComplex& b,
                                        const ProximityConfig& cfg)
{
    require_same_host(a, b);
    return !detail::descriptive_match(*a.host, sub_interior(a).triangles,
                                      sub_interior(b).triangles, cfg)
                .empty();
}

}   // namespace shapecx

#endif
