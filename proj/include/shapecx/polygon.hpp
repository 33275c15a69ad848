/**
 * Simple polygons with optional holes: simplicity testing, exact point
 * location, signed area and convex hulls.
 */

#ifndef SHAPECX_POLYGON_HPP
#define SHAPECX_POLYGON_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "shapecx/geometry.hpp"

namespace shapecx {

using Ring = std::vector<Point2>;

struct SimplePolygon {
    Ring              outer;
    std::vector<Ring> holes;
};

enum class PointLocation { INTERIOR, BOUNDARY, EXTERIOR };

/** Twice the signed shoelace area of a ring; positive iff CCW. */
inline Rational ring_area_doubled(const Ring& ring)
{
    Rational sum = 0;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % ring.size()];
        sum += a.x * b.y - b.x * a.y;
    }
    return sum;
}

inline Rational ring_area(const Ring& ring)
{
    return ring_area_doubled(ring) / 2;
}

/**
 * True iff the closed ring is a simple polygon: at least three vertices,
 * all distinct, and no two edges meeting anywhere except adjacent edges at
 * their one shared endpoint.  Collinear vertices along an edge are allowed;
 * spikes (an edge doubling back over its neighbour) are not.
 */
inline bool is_simple_polygon(const Ring& ring)
{
    const std::size_t n = ring.size();
    if (n < 3)
        throw Error(ErrorCode::TOO_FEW_VERTICES,
                    "ring has " + std::to_string(n) + " vertices, need >= 3");

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ring[i] == ring[j])
                return false;

    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % n];
        const Point2& c = ring[(i + 2) % n];
        if (orientation(a, b, c) == Orientation::COLLINEAR
            && (point_on_segment(c, a, b) || point_on_segment(a, b, c)))
            return false;
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edge pairs, including the wrap-around pair.
            if (j == i + 1 || (i == 0 && j == n - 1))
                continue;
            if (segments_intersect(ring[i], ring[(i + 1) % n], ring[j],
                                   ring[(j + 1) % n]))
                return false;
        }
    }
    return true;
}

/** Locates p relative to one simple ring, ignoring any holes. */
inline PointLocation locate_in_ring(const Ring& ring, const Point2& p)
{
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, ring[i], ring[(i + 1) % n]))
            return PointLocation::BOUNDARY;

    // Ray cast toward +x with the half-open edge rule; p is off the
    // boundary here, so every counted crossing is strict.
    int parity = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = ring[i];
        const Point2& b = ring[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational xc = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (xc > p.x)
                parity ^= 1;
        }
    }
    return parity != 0 ? PointLocation::INTERIOR : PointLocation::EXTERIOR;
}

/**
 * Locates p relative to a polygon with holes.  Points on any ring are
 * BOUNDARY; points inside a hole are EXTERIOR.
 */
inline PointLocation point_in_polygon(const SimplePolygon& poly, const Point2& p)
{
    PointLocation outer = locate_in_ring(poly.outer, p);
    if (outer != PointLocation::INTERIOR)
        return outer;
    for (const Ring& hole : poly.holes) {
        PointLocation in_hole = locate_in_ring(hole, p);
        if (in_hole == PointLocation::BOUNDARY)
            return PointLocation::BOUNDARY;
        if (in_hole == PointLocation::INTERIOR)
            return PointLocation::EXTERIOR;
    }
    return PointLocation::INTERIOR;
}

/**
 * Validates a polygon-with-holes: every ring simple, every hole strictly
 * inside the outer ring, holes pairwise disjoint.  Throws POLYGON_INVALID
 * naming the offending ring.
 */
inline void validate_polygon(const SimplePolygon& poly)
{
    if (!is_simple_polygon(poly.outer))
        throw Error(ErrorCode::POLYGON_INVALID, "outer ring is not simple");

    auto edge_hits_ring = [](const Ring& r1, const Ring& r2) {
        for (std::size_t i = 0; i < r1.size(); ++i)
            for (std::size_t j = 0; j < r2.size(); ++j)
                if (segments_intersect(r1[i], r1[(i + 1) % r1.size()], r2[j],
                                       r2[(j + 1) % r2.size()]))
                    return true;
        return false;
    };

    for (std::size_t h = 0; h < poly.holes.size(); ++h) {
        const Ring& hole = poly.holes[h];
        std::string name = "hole " + std::to_string(h);
        if (!is_simple_polygon(hole))
            throw Error(ErrorCode::POLYGON_INVALID, name + " is not simple");
        for (const Point2& v : hole)
            if (locate_in_ring(poly.outer, v) != PointLocation::INTERIOR)
                throw Error(ErrorCode::POLYGON_INVALID,
                            name + " is not strictly inside the outer ring");
        if (edge_hits_ring(hole, poly.outer))
            throw Error(ErrorCode::POLYGON_INVALID,
                        name + " touches the outer ring");
        for (std::size_t g = 0; g < h; ++g) {
            if (edge_hits_ring(hole, poly.holes[g]))
                throw Error(ErrorCode::POLYGON_INVALID,
                            name + " touches hole " + std::to_string(g));
            // With no edge contact, containment either way shows up at any
            // single vertex.
            if (locate_in_ring(poly.holes[g], hole[0]) == PointLocation::INTERIOR
                || locate_in_ring(hole, poly.holes[g][0])
                       == PointLocation::INTERIOR)
                throw Error(ErrorCode::POLYGON_INVALID,
                            name + " overlaps hole " + std::to_string(g));
        }
    }
}

/**
 * Strictly convex hull in CCW order (collinear boundary points dropped),
 * via the monotone chain sweep.  Needs at least three non-collinear
 * distinct points.
 */
inline Ring convex_hull(std::vector<Point2> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        throw Error(ErrorCode::TOO_FEW_VERTICES,
                    "hull needs >= 3 distinct points");

    auto build = [&](auto begin, auto end) {
        std::vector<Point2> chain;
        for (auto it = begin; it != end; ++it) {
            while (chain.size() >= 2
                   && orientation(chain[chain.size() - 2], chain.back(), *it)
                          != Orientation::CCW)
                chain.pop_back();
            chain.push_back(*it);
        }
        return chain;
    };

    std::vector<Point2> lower = build(pts.begin(), pts.end());
    std::vector<Point2> upper = build(pts.rbegin(), pts.rend());

    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3)
        throw Error(ErrorCode::TOO_FEW_VERTICES, "points are collinear");
    return lower;
}

}   // namespace shapecx

#endif
