#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "shapecx/fixtures.hpp"
#include "shapecx/triangulation.hpp"

using namespace shapecx;

namespace {

// Brute force Delaunay property: no input point strictly inside any
// triangle's circumcircle.
void check_empty_circumcircles(const ComplexPtr& cx)
{
    for (int t = 0; t < cx->triangle_count(); ++t) {
        Triangle2 tri = cx->triangle_geometry(t);
        for (const Point2& p : cx->vertices)
            CHECK(oracle::incircle(tri.a, tri.b, tri.c, p) <= 0);
    }
}

}   // namespace

TEST_CASE("three points make one triangle")
{
    ComplexPtr cx = delaunay({{0, 0}, {2, 0}, {0, 2}});
    CHECK(cx->vertex_count() == 3);
    CHECK(cx->triangle_count() == 1);
    CHECK(cx->edges.size() == 3);
}

TEST_CASE("unit square splits along the tie-broken diagonal")
{
    ComplexPtr cx = fixtures::unit_square_complex();
    REQUIRE(cx->vertex_count() == 4);
    REQUIRE(cx->triangle_count() == 2);
    CHECK(cx->edges.size() == 5);

    // Vertices arrive sorted: (0,0) (0,1) (1,0) (1,1).  Both diagonals are
    // Delaunay-legal here; the canonical flip pass settles on (0,0)-(1,1).
    CHECK(cx->vertices[0] == Point2{0, 0});
    CHECK(cx->vertices[3] == Point2{1, 1});
    std::set<Edge> edges(cx->edges.begin(), cx->edges.end());
    CHECK(edges.count(make_edge(0, 3)));
    CHECK_FALSE(edges.count(make_edge(1, 2)));
}

TEST_CASE("degenerate inputs are rejected")
{
    CHECK_THROWS_AS(delaunay({{0, 0}, {1, 1}}), Error);
    CHECK_THROWS_AS(delaunay({{0, 0}, {1, 1}, {2, 2}, {3, 3}}), Error);
    try {
        delaunay({{0, 0}, {1, 1}, {2, 2}});
        FAIL("expected TRIANGULATION_IMPOSSIBLE");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TRIANGULATION_IMPOSSIBLE);
    }
}

TEST_CASE("triangulation is a pure function of the point set")
{
    std::vector<Point2> pts;
    SplitMix64          rng(31);
    for (int i = 0; i < 30; ++i)
        pts.push_back({Rational(rng.range(0, 64), 8),
                       Rational(rng.range(0, 64), 8)});
    ComplexPtr first = delaunay(pts);

    std::reverse(pts.begin(), pts.end());
    pts.push_back(pts[3]);   // duplicates are absorbed
    ComplexPtr second = delaunay(pts);
    CHECK(same_content(*first, *second));
}

TEST_CASE("random sets satisfy the empty circumcircle property",
          "[property]")
{
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        SplitMix64 rng(seed);
        ComplexPtr cx = delaunay(fixtures::random_points(rng, 40, 8));
        check_empty_circumcircles(cx);
    }
}

TEST_CASE("triangulated disk: Euler count and exact hull area",
          "[property]")
{
    for (std::uint64_t seed : {5ULL, 6ULL, 7ULL, 8ULL}) {
        SplitMix64 rng(seed);
        std::vector<Point2> pts = fixtures::random_points(rng, 60, 10);
        ComplexPtr          cx  = delaunay(pts);

        long v = cx->vertex_count();
        long e = static_cast<long>(cx->edges.size());
        long t = cx->triangle_count();
        CHECK(v - e + t == 1);

        Rational tri_sum = 0;
        for (int i = 0; i < cx->triangle_count(); ++i)
            tri_sum += triangle_area(cx->triangle_geometry(i));
        Ring hull = convex_hull(pts);
        CHECK(tri_sum == oracle::ring_area_doubled(hull) / 2);
    }
}

TEST_CASE("cocircular grids triangulate deterministically")
{
    // A 3x3 integer grid: every unit square is a cocircular tie.
    std::vector<Point2> pts;
    for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
            pts.push_back({x, y});
    ComplexPtr cx = delaunay(pts);
    CHECK(cx->triangle_count() == 8);
    check_empty_circumcircles(cx);
    ComplexPtr again = delaunay(pts);
    CHECK(same_content(*cx, *again));
}

TEST_CASE("shape labels: square complex from its own corners")
{
    ShapeComplex sc =
        build_shape_complex(fixtures::unit_square_complex(),
                            fixtures::unit_square_shape());
    for (Label l : sc.complex->vertex_labels)
        CHECK(l == Label::SHAPE_BOUNDARY);
    for (Label l : sc.complex->triangle_labels)
        CHECK(l == Label::SHAPE_INTERIOR);
    CHECK(sc.shape_vertex_ids.size() == 4);
}

TEST_CASE("shape labels: margin sampling marks exterior vertices")
{
    ShapeComplex sc = triangulate_shape(
        fixtures::unit_square_shape(),
        {Rational(1, 2), Rational(1, 2), Rational(1, 2)});
    int exterior = 0;
    for (Label l : sc.complex->vertex_labels)
        if (l == Label::EXTERIOR)
            ++exterior;
    CHECK(exterior > 0);
    for (int v : sc.shape_vertex_ids)
        CHECK(sc.complex->vertex_labels[static_cast<std::size_t>(v)]
              != Label::EXTERIOR);
}

TEST_CASE("shape labels: triangles inside the annulus hole are exterior")
{
    SimplePolygon shape = fixtures::annulus_shape();
    ShapeComplex  sc =
        triangulate_shape(shape, {1, Rational(1, 2), Rational(1, 2)});
    bool found_hole_triangle = false;
    for (int t = 0; t < sc.complex->triangle_count(); ++t) {
        Point2 c = triangle_centroid(sc.complex->triangle_geometry(t));
        PointLocation loc = point_in_polygon(shape, c);
        Label label =
            sc.complex->triangle_labels[static_cast<std::size_t>(t)];
        if (loc == PointLocation::INTERIOR)
            CHECK(label == Label::SHAPE_INTERIOR);
        else
            CHECK(label == Label::EXTERIOR);
        if (label == Label::EXTERIOR
            && point_in_polygon(SimplePolygon{shape.holes[0], {}}, c)
                   == PointLocation::INTERIOR)
            found_hole_triangle = true;
    }
    CHECK(found_hole_triangle);
}
