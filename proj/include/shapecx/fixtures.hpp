/**
 * Deterministic geometric fixtures and seeded random generators shared by
 * tests and the command line demos.  Randomness always flows through an
 * explicit SplitMix64 so every caller can reproduce a run from its seed.
 *
 * Random coordinates are multiples of 1/64.  That keeps the common
 * denominator of any generated point set small, which in turn keeps the
 * scaled integer lattice compact enough for exact sign evaluation to stay
 * fast even at a few hundred points.
 */

#ifndef SHAPECX_FIXTURES_HPP
#define SHAPECX_FIXTURES_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "shapecx/nerve.hpp"
#include "shapecx/prng.hpp"
#include "shapecx/triangulation.hpp"

namespace shapecx::fixtures {

inline SimplePolygon unit_square_shape()
{
    Ring outer{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return SimplePolygon{outer, {}};
}

/** Two triangles across the (0,0)-(1,1) diagonal: the tie-broken result. */
inline ComplexPtr unit_square_complex()
{
    return delaunay({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline std::vector<Point2> hexagon_points()
{
    return {{0, 0}, {5, 0},  {3, 4},   {-3, 4},
            {-5, 0}, {-3, -4}, {3, -4}};
}

inline SimplePolygon hexagon_shape()
{
    Ring outer{{5, 0}, {3, 4}, {-3, 4}, {-5, 0}, {-3, -4}, {3, -4}};
    return SimplePolygon{outer, {}};
}

/** Six-triangle fan around the origin; the center star covers everything. */
inline ShapeComplex hexagon_shape_complex()
{
    return build_shape_complex(delaunay(hexagon_points()), hexagon_shape());
}

/** Square with a centered square hole; used for sampling and labeling. */
inline SimplePolygon annulus_shape()
{
    Ring outer{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    Ring hole{{1, 1}, {3, 1}, {3, 3}, {1, 3}};
    return SimplePolygon{outer, {hole}};
}

namespace detail {

/** Band of 2n triangles between concentric n-gon rings. */
inline ComplexPtr ring_band(const std::vector<Point2>& outer,
                            const std::vector<Point2>& inner)
{
    const int n = static_cast<int>(outer.size());
    std::vector<Point2> verts = outer;
    verts.insert(verts.end(), inner.begin(), inner.end());
    std::vector<std::array<int, 3>> tris;
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        tris.push_back({i, j, n + i});
        tris.push_back({j, n + j, n + i});
    }
    return make_complex(std::move(verts), std::move(tris));
}

}   // namespace detail

/**
 * Eight triangles between the square [0,4]^2 and the square [1,3]^2; the
 * smallest all-quadrilateral band around a hole.  Euler characteristic 0,
 * connected, one independent cycle.
 */
inline ComplexPtr annulus_band8_complex()
{
    return detail::ring_band({{0, 0}, {4, 0}, {4, 4}, {0, 4}},
                             {{1, 1}, {3, 1}, {3, 3}, {1, 3}});
}

/**
 * Sixteen triangles between concentric octagons.  Same homology as the
 * eight-triangle band, but every vertex star and every pairwise star
 * overlap is a disk, so its star cover is a good cover.
 */
inline ComplexPtr annulus_band16_complex()
{
    std::vector<Point2> outer{{4, 0},  {3, 3},   {0, 4},  {-3, 3},
                              {-4, 0}, {-3, -3}, {0, -4}, {3, -3}};
    std::vector<Point2> inner;
    for (const Point2& p : outer)
        inner.push_back({p.x / 2, p.y / 2});
    return detail::ring_band(outer, inner);
}

/** Long thin rectangle whose far corner stars share no triangle. */
inline SimplePolygon strip_shape()
{
    Ring outer{{0, 0}, {3, 0}, {3, 1}, {0, 1}};
    return SimplePolygon{outer, {}};
}

/** n distinct points with coordinates k/64, 0 <= k/64 <= span. */
inline std::vector<Point2> random_points(SplitMix64& rng, int n, int span)
{
    const std::uint64_t steps = static_cast<std::uint64_t>(span) * 64;
    std::set<Point2>    seen;
    while (static_cast<int>(seen.size()) < n) {
        Rational x(static_cast<long long>(rng.below(steps + 1)), 64);
        Rational y(static_cast<long long>(rng.below(steps + 1)), 64);
        seen.insert(Point2{x, y});
    }
    return {seen.begin(), seen.end()};
}

/**
 * Convex polygon with at least `min_vertices` corners: the convex hull of
 * random points, retried until the hull is large enough.
 */
inline SimplePolygon random_convex_polygon(SplitMix64& rng, int min_vertices,
                                           int span = 8)
{
    for (;;) {
        std::vector<Point2> pts =
            random_points(rng, std::max(min_vertices * 3, 12), span);
        try {
            Ring hull = convex_hull(pts);
            if (static_cast<int>(hull.size()) >= min_vertices)
                return SimplePolygon{hull, {}};
        } catch (const Error&) {
            // all points collinear; draw again
        }
    }
}

namespace detail {

/** Strict CCW angular order around c, ties broken by distance. */
inline bool angle_less(const Point2& c, const Point2& a, const Point2& b)
{
    auto half = [&](const Point2& p) {
        if (p.y != c.y)
            return p.y > c.y ? 0 : 1;
        return p.x > c.x ? 0 : 1;
    };
    int ha = half(a);
    int hb = half(b);
    if (ha != hb)
        return ha < hb;
    Orientation o = orientation(c, a, b);
    if (o != Orientation::COLLINEAR)
        return o == Orientation::CCW;
    return squared_distance(c, a) < squared_distance(c, b);
}

}   // namespace detail

/**
 * Simple polygon star shaped around the centroid of a random point set:
 * the points in angular order.  Draws are rejected until the polygon
 * passes full validation, so ties in angle (which can produce spikes)
 * cost only a retry.
 */
inline SimplePolygon random_simple_polygon(SplitMix64& rng, int n,
                                           int span = 8)
{
    for (;;) {
        std::vector<Point2> pts = random_points(rng, n, span);
        Point2 c{0, 0};
        for (const Point2& p : pts) {
            c.x += p.x;
            c.y += p.y;
        }
        c.x /= n;
        c.y /= n;
        bool onc = false;
        for (const Point2& p : pts)
            if (p == c)
                onc = true;
        if (onc)
            continue;
        std::sort(pts.begin(), pts.end(),
                  [&](const Point2& a, const Point2& b) {
                      return detail::angle_less(c, a, b);
                  });
        SimplePolygon poly{Ring{pts}, {}};
        try {
            validate_polygon(poly);
            return poly;
        } catch (const Error&) {
            // angle tie produced a spike or overlap; draw again
        }
    }
}

/**
 * Edge-connected random subcomplex: a breadth first blob of `size`
 * triangles grown from a random seed triangle.
 */
inline SubComplex random_blob(SplitMix64& rng, const ComplexPtr& host,
                              int size)
{
    SubComplex out = empty_subcomplex(host);
    if (host->triangle_count() == 0)
        return out;
    int seed = static_cast<int>(
        rng.below(static_cast<std::uint64_t>(host->triangle_count())));
    std::vector<int> frontier{seed};
    out.triangle_ids.insert(seed);
    while (static_cast<int>(out.triangle_ids.size()) < size
           && !frontier.empty()) {
        std::size_t pick = static_cast<std::size_t>(
            rng.below(static_cast<std::uint64_t>(frontier.size())));
        int t = frontier[pick];
        frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
        const auto& tri = host->triangles[static_cast<std::size_t>(t)];
        for (int e = 0; e < 3; ++e) {
            Edge edge = make_edge(tri[static_cast<std::size_t>(e)],
                                  tri[static_cast<std::size_t>((e + 1) % 3)]);
            for (int nb : host->edge_triangles.at(edge))
                if (!out.triangle_ids.count(nb)) {
                    out.triangle_ids.insert(nb);
                    frontier.push_back(nb);
                    if (static_cast<int>(out.triangle_ids.size()) >= size)
                        return out;
                }
        }
    }
    return out;
}

/**
 * Family of subcomplexes for axiom runs: connected blobs of varied size,
 * an occasional union of two blobs (which may be disconnected), and an
 * occasional extra isolated vertex.
 */
inline std::vector<SubComplex>
random_subcomplex_family(SplitMix64& rng, const ComplexPtr& host, int count,
                         int max_triangles)
{
    std::vector<SubComplex> family;
    for (int i = 0; i < count; ++i) {
        int size = 1
                   + static_cast<int>(rng.below(
                       static_cast<std::uint64_t>(max_triangles)));
        SubComplex s = random_blob(rng, host, size);
        if (i % 4 == 3)
            s = union_of(s, random_blob(rng, host, size));
        if (i % 5 == 4 && host->vertex_count() > 0) {
            int v = static_cast<int>(rng.below(
                static_cast<std::uint64_t>(host->vertex_count())));
            SimplexSet cl = sub_closure(s);
            if (!cl.vertices.count(v))
                s.vertex_ids.insert(v);
        }
        family.push_back(std::move(s));
    }
    return family;
}

}   // namespace shapecx::fixtures

#endif
