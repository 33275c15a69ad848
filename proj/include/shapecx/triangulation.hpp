/**
 * Shape sampling and exact Delaunay triangulation.
 *
 * The triangulator is incremental (Bowyer-Watson) over a scaffold triangle
 * whose vertices are placed, by an exact bound, outside every circumcircle
 * of the input; removing the scaffold then leaves precisely the Delaunay
 * triangulation of the input.  All predicates are evaluated on a common
 * integer lattice, so the result depends only on the point set, never on
 * rounding.  Points cocircular in groups of four or more admit several
 * Delaunay triangulations; a final canonical pass rewrites every such
 * group's diagonals toward the lexicographically smallest vertex-index
 * pair, keeping the output a pure function of the input.
 */

#ifndef SHAPECX_TRIANGULATION_HPP
#define SHAPECX_TRIANGULATION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "shapecx/complex.hpp"
#include "shapecx/polygon.hpp"

namespace shapecx {

/** A labeled triangulation of the plane region around a shape, with the
 *  ids of the vertices that lie on or inside the shape. */
struct ShapeComplex {
    ComplexPtr    complex;
    SimplePolygon shape;
    std::set<int> shape_vertex_ids;
};

/** Sampling densities for turning a polygon into a point set. */
struct SamplingParams {
    Rational boundary_step;      // max arc length between boundary samples
    Rational interior_spacing;   // pitch of the interior grid
    Rational margin = 0;         // width of the sampled band outside the shape
};

namespace detail {

/** Smallest integer k >= 1 with (k * step)^2 >= len2, decided exactly. */
inline BigInt subdivision_count(const Rational& len2, const Rational& step)
{
    Rational q = len2 / (step * step);
    BigInt   c = rational_ceil(q);
    if (c <= 1)
        return 1;
    BigInt s = boost::multiprecision::sqrt(c);
    return s * s == c ? s : s + 1;
}

inline void sample_ring(const Ring& ring, const Rational& step,
                        std::set<Point2>& out)
{
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % ring.size()];
        BigInt        k = subdivision_count(squared_distance(a, b), step);
        out.insert(a);
        for (BigInt j = 1; j < k; ++j) {
            Rational t(j, k);
            out.insert({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
        }
    }
}

}   // namespace detail

/**
 * Samples a polygon into a finite point set: every ring vertex, boundary
 * points at most boundary_step apart along each edge, interior grid points
 * at interior_spacing pitch (grid anchored at the origin), and, when
 * margin > 0, the corners of the margin-expanded bounding box together
 * with grid points outside the shape but inside that box.  Output is
 * duplicate-free and sorted lexicographically.
 */
inline std::vector<Point2> sample_shape(const SimplePolygon& poly,
                                        const SamplingParams& params)
{
    validate_polygon(poly);
    if (params.boundary_step <= 0 || params.interior_spacing <= 0
        || params.margin < 0)
        throw Error(ErrorCode::POLYGON_INVALID,
                    "sampling densities must be positive, margin nonnegative");

    std::set<Point2> pts;
    detail::sample_ring(poly.outer, params.boundary_step, pts);
    for (const Ring& hole : poly.holes)
        detail::sample_ring(hole, params.boundary_step, pts);

    Rational minx = poly.outer[0].x, maxx = minx;
    Rational miny = poly.outer[0].y, maxy = miny;
    for (const Point2& p : poly.outer) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }

    const Rational& sp = params.interior_spacing;
    auto grid_scan = [&](const Rational& x0, const Rational& x1,
                         const Rational& y0, const Rational& y1,
                         PointLocation wanted) {
        for (BigInt i = rational_ceil(x0 / sp); i <= rational_floor(x1 / sp);
             ++i) {
            for (BigInt j = rational_ceil(y0 / sp);
                 j <= rational_floor(y1 / sp); ++j) {
                Point2 p{Rational(i) * sp, Rational(j) * sp};
                if (point_in_polygon(poly, p) == wanted)
                    pts.insert(p);
            }
        }
    };

    grid_scan(minx, maxx, miny, maxy, PointLocation::INTERIOR);

    if (params.margin > 0) {
        const Rational& m = params.margin;
        pts.insert({minx - m, miny - m});
        pts.insert({maxx + m, miny - m});
        pts.insert({minx - m, maxy + m});
        pts.insert({maxx + m, maxy + m});
        grid_scan(minx - m, maxx + m, miny - m, maxy + m,
                  PointLocation::EXTERIOR);
    }

    return {pts.begin(), pts.end()};
}

namespace detail {

struct BwTriangle {
    int  a, b, c;
    bool alive;
};

/** Canonical triangle storage: smallest vertex first, cyclic order kept. */
inline std::array<int, 3> canonical_triangle(int a, int b, int c)
{
    while (!(a < b && a < c)) {
        int t = a;
        a = b;
        b = c;
        c = t;
    }
    return {a, b, c};
}

}   // namespace detail

/**
 * Exact Delaunay triangulation of a point set.  Input order and duplicates
 * are irrelevant: points are deduplicated and inserted in lexicographic
 * order, and cocircular ties are resolved canonically, so equal point sets
 * give identical complexes.  Throws TRIANGULATION_IMPOSSIBLE when fewer
 * than three distinct points remain or all of them are collinear.
 */
inline ComplexPtr delaunay(std::vector<Point2> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const int n = static_cast<int>(points.size());
    if (n < 3)
        throw Error(ErrorCode::TRIANGULATION_IMPOSSIBLE,
                    "need at least 3 distinct points");

    std::vector<ScaledPoint> pts = scale_to_integers(points);

    bool collinear = true;
    for (int i = 2; i < n && collinear; ++i)
        if (orient_sign(pts[0], pts[1], pts[static_cast<std::size_t>(i)]) != 0)
            collinear = false;
    if (collinear)
        throw Error(ErrorCode::TRIANGULATION_IMPOSSIBLE,
                    "all points are collinear");

    // Scaffold vertices go outside every circumcircle of the input: with
    // integer coordinates any non-collinear triple has doubled area >= 1,
    // so every circumradius is at most d^3 / 2 for d the bbox diameter
    // bound, and every circumcircle stays within 2R + d of the bbox center.
    BigInt minx = pts[0].x, maxx = minx, miny = pts[0].y, maxy = miny;
    for (const ScaledPoint& p : pts) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    BigInt diag2 = (maxx - minx) * (maxx - minx)
                 + (maxy - miny) * (maxy - miny);
    BigInt d     = boost::multiprecision::sqrt(diag2) + 1;
    BigInt rho = d * d * d + d + 1;
    BigInt cx  = (minx + maxx) / 2;
    BigInt cy  = (miny + maxy) / 2;

    pts.push_back({cx - 3 * rho, cy - 3 * rho});
    pts.push_back({cx + 3 * rho, cy - 3 * rho});
    pts.push_back({cx, cy + 3 * rho});

    std::vector<detail::BwTriangle> tris;
    tris.push_back({n, n + 1, n + 2, true});

    std::vector<int>             bad;
    std::map<std::pair<int, int>, int> boundary_count;
    for (int p = 0; p < n; ++p) {
        bad.clear();
        boundary_count.clear();
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            const auto& tri = tris[static_cast<std::size_t>(t)];
            if (!tri.alive)
                continue;
            if (incircle_sign(pts[static_cast<std::size_t>(tri.a)],
                              pts[static_cast<std::size_t>(tri.b)],
                              pts[static_cast<std::size_t>(tri.c)],
                              pts[static_cast<std::size_t>(p)])
                > 0)
                bad.push_back(t);
        }

        for (int t : bad) {
            auto& tri = tris[static_cast<std::size_t>(t)];
            tri.alive = false;
            const int vs[3] = {tri.a, tri.b, tri.c};
            for (int e = 0; e < 3; ++e) {
                int u = vs[e], v = vs[(e + 1) % 3];
                ++boundary_count[u < v ? std::pair(u, v) : std::pair(v, u)];
            }
        }

        for (const auto& [edge, count] : boundary_count) {
            if (count != 1)
                continue;
            int u = edge.first, v = edge.second;
            int s = orient_sign(pts[static_cast<std::size_t>(p)],
                                pts[static_cast<std::size_t>(u)],
                                pts[static_cast<std::size_t>(v)]);
            if (s == 0)
                throw Error(ErrorCode::TRIANGULATION_IMPOSSIBLE,
                            "degenerate cavity edge");
            if (s < 0)
                std::swap(u, v);
            tris.push_back({p, u, v, true});
        }
    }

    std::vector<std::array<int, 3>> finite;
    for (const auto& tri : tris)
        if (tri.alive && tri.a < n && tri.b < n && tri.c < n)
            finite.push_back(detail::canonical_triangle(tri.a, tri.b, tri.c));
    if (finite.empty())
        throw Error(ErrorCode::TRIANGULATION_IMPOSSIBLE,
                    "no finite triangles survived");

    // Canonical diagonals for cocircular quads.  A flip never breaks the
    // empty-circumcircle property (the four points stay on one circle), and
    // each flip replaces an interior edge by a lexicographically smaller
    // one, so the sweep terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<Edge, std::vector<int>> by_edge;
        for (int t = 0; t < static_cast<int>(finite.size()); ++t)
            for (int e = 0; e < 3; ++e)
                by_edge[make_edge(finite[static_cast<std::size_t>(t)]
                                        [static_cast<std::size_t>(e)],
                                  finite[static_cast<std::size_t>(t)]
                                        [static_cast<std::size_t>((e + 1) % 3)])]
                    .push_back(t);

        for (const auto& [edge, owners] : by_edge) {
            if (owners.size() != 2)
                continue;
            auto& t1 = finite[static_cast<std::size_t>(owners[0])];
            auto& t2 = finite[static_cast<std::size_t>(owners[1])];
            auto opposite = [&](const std::array<int, 3>& tri) {
                for (int v : tri)
                    if (v != edge[0] && v != edge[1])
                        return v;
                return -1;
            };
            int c = opposite(t1);
            int dvx = opposite(t2);
            int si = incircle_sign(pts[static_cast<std::size_t>(t1[0])],
                                   pts[static_cast<std::size_t>(t1[1])],
                                   pts[static_cast<std::size_t>(t1[2])],
                                   pts[static_cast<std::size_t>(dvx)]);
            if (si != 0)
                continue;
            Edge candidate = make_edge(c, dvx);
            if (candidate >= edge)
                continue;
            int s1 = orient_sign(pts[static_cast<std::size_t>(c)],
                                 pts[static_cast<std::size_t>(dvx)],
                                 pts[static_cast<std::size_t>(edge[0])]);
            int s2 = orient_sign(pts[static_cast<std::size_t>(c)],
                                 pts[static_cast<std::size_t>(dvx)],
                                 pts[static_cast<std::size_t>(edge[1])]);
            if (s1 == 0 || s2 == 0 || s1 == s2)
                continue;

            auto orient_ccw = [&](int a, int b, int cc) {
                if (orient_sign(pts[static_cast<std::size_t>(a)],
                                pts[static_cast<std::size_t>(b)],
                                pts[static_cast<std::size_t>(cc)])
                    < 0)
                    std::swap(b, cc);
                return detail::canonical_triangle(a, b, cc);
            };
            t1 = orient_ccw(edge[0], c, dvx);
            t2 = orient_ccw(edge[1], c, dvx);
            changed = true;
            break;
        }
    }

    std::sort(finite.begin(), finite.end());
    return make_complex(std::move(points), std::move(finite));
}

/**
 * Labels a triangulation against a shape: vertices by exact point location
 * (SHAPE_INTERIOR / SHAPE_BOUNDARY / EXTERIOR), triangles SHAPE_INTERIOR
 * when the exact centroid is interior to the shape and EXTERIOR otherwise.
 */
inline ShapeComplex build_shape_complex(const ComplexPtr& cx,
                                        const SimplePolygon& shape)
{
    validate_polygon(shape);

    std::vector<Label> vlabels;
    vlabels.reserve(cx->vertices.size());
    std::set<int> shape_ids;
    for (int v = 0; v < cx->vertex_count(); ++v) {
        switch (point_in_polygon(shape, cx->vertices[static_cast<std::size_t>(v)])) {
            case PointLocation::INTERIOR:
                vlabels.push_back(Label::SHAPE_INTERIOR);
                shape_ids.insert(v);
                break;
            case PointLocation::BOUNDARY:
                vlabels.push_back(Label::SHAPE_BOUNDARY);
                shape_ids.insert(v);
                break;
            case PointLocation::EXTERIOR:
                vlabels.push_back(Label::EXTERIOR);
                break;
        }
    }

    std::vector<Label> tlabels;
    tlabels.reserve(cx->triangles.size());
    for (int t = 0; t < cx->triangle_count(); ++t) {
        Point2 centroid = triangle_centroid(cx->triangle_geometry(t));
        tlabels.push_back(point_in_polygon(shape, centroid)
                                  == PointLocation::INTERIOR
                              ? Label::SHAPE_INTERIOR
                              : Label::EXTERIOR);
    }

    ComplexPtr labeled = make_complex(cx->vertices, cx->triangles,
                                      std::move(vlabels), std::move(tlabels));
    return {labeled, shape, std::move(shape_ids)};
}

/** Full pipeline: validate, sample, triangulate, label. */
inline ShapeComplex triangulate_shape(const SimplePolygon& shape,
                                      const SamplingParams& params)
{
    std::vector<Point2> pts = sample_shape(shape, params);
    return build_shape_complex(delaunay(std::move(pts)), shape);
}

}   // namespace shapecx

#endif
