/**
 * Finite 2-dimensional simplicial complexes embedded in the plane, plus
 * subcomplexes and the closure / boundary / interior operators on them.
 *
 * A complex is immutable once built and shared through ComplexPtr; a
 * SubComplex names triangles (and optionally isolated vertices) of one
 * host complex.  All operators below are purely combinatorial, but in a
 * geometrically valid complex they agree with the point-set notions:
 * closed triangles of one complex intersect exactly when they share a
 * face, so "closures share a simplex" is the same as "underlying point
 * sets intersect".
 */

#ifndef SHAPECX_COMPLEX_HPP
#define SHAPECX_COMPLEX_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shapecx/geometry.hpp"

namespace shapecx {

enum class Label { UNLABELED, SHAPE_INTERIOR, SHAPE_BOUNDARY, EXTERIOR };

inline const char* to_string(Label label)
{
    switch (label) {
        case Label::UNLABELED:      return "unlabeled";
        case Label::SHAPE_INTERIOR: return "shape_interior";
        case Label::SHAPE_BOUNDARY: return "shape_boundary";
        case Label::EXTERIOR:       return "exterior";
    }
    return "unlabeled";
}

using Edge = std::array<int, 2>;   // endpoints sorted ascending

inline Edge make_edge(int u, int v)
{
    return u < v ? Edge{u, v} : Edge{v, u};
}

struct SimplicialComplex {
    std::vector<Point2>             vertices;
    std::vector<std::array<int, 3>> triangles;   // CCW vertex triples
    std::vector<Label>              vertex_labels;
    std::vector<Label>              triangle_labels;

    // Derived incidence, filled by make_complex.
    std::vector<Edge>                edges;   // sorted lexicographically
    std::map<Edge, std::vector<int>> edge_triangles;
    std::vector<std::vector<int>>    vertex_triangles;

    Triangle2 triangle_geometry(int t) const
    {
        const auto& tri = triangles[static_cast<std::size_t>(t)];
        return {vertices[static_cast<std::size_t>(tri[0])],
                vertices[static_cast<std::size_t>(tri[1])],
                vertices[static_cast<std::size_t>(tri[2])]};
    }

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int triangle_count() const { return static_cast<int>(triangles.size()); }
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

/**
 * Builds a complex from vertices and CCW triangles and derives the
 * incidence tables.  Validates: indices in range, triangles non-degenerate
 * and CCW, no repeated triangle, every edge in at most two triangles.
 * Isolated vertices are permitted.
 */
inline ComplexPtr make_complex(std::vector<Point2> vertices,
                               std::vector<std::array<int, 3>> triangles,
                               std::vector<Label> vertex_labels   = {},
                               std::vector<Label> triangle_labels = {})
{
    auto cx       = std::make_shared<SimplicialComplex>();
    cx->vertices  = std::move(vertices);
    cx->triangles = std::move(triangles);
    const int nv  = cx->vertex_count();

    for (std::size_t i = 0; i < cx->vertices.size(); ++i)
        for (std::size_t j = i + 1; j < cx->vertices.size(); ++j)
            if (cx->vertices[i] == cx->vertices[j])
                throw Error(ErrorCode::POLYGON_INVALID,
                            "vertices " + std::to_string(i) + " and "
                                + std::to_string(j) + " coincide");

    cx->vertex_triangles.assign(static_cast<std::size_t>(nv), {});
    std::set<std::array<int, 3>> seen;
    for (int t = 0; t < cx->triangle_count(); ++t) {
        auto& tri = cx->triangles[static_cast<std::size_t>(t)];
        for (int v : tri)
            if (v < 0 || v >= nv)
                throw Error(ErrorCode::UNKNOWN_VERTEX,
                            "triangle " + std::to_string(t)
                                + " references vertex " + std::to_string(v));
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
            throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                        "triangle " + std::to_string(t)
                            + " repeats a vertex");

        std::array<int, 3> key = tri;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                        "triangle " + std::to_string(t) + " is a duplicate");

        Triangle2 geom = cx->triangle_geometry(t);
        Orientation o  = orientation(geom.a, geom.b, geom.c);
        if (o == Orientation::COLLINEAR)
            throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                        "triangle " + std::to_string(t) + " is collinear");
        if (o == Orientation::CW)
            throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                        "triangle " + std::to_string(t) + " is not CCW");

        for (int e = 0; e < 3; ++e) {
            Edge edge = make_edge(tri[static_cast<std::size_t>(e)],
                                  tri[static_cast<std::size_t>((e + 1) % 3)]);
            cx->edge_triangles[edge].push_back(t);
        }
        for (int v : tri)
            cx->vertex_triangles[static_cast<std::size_t>(v)].push_back(t);
    }

    for (const auto& [edge, tris] : cx->edge_triangles) {
        if (tris.size() > 2)
            throw Error(ErrorCode::DEGENERATE_TRIANGLE,
                        "edge (" + std::to_string(edge[0]) + ","
                            + std::to_string(edge[1]) + ") lies in "
                            + std::to_string(tris.size()) + " triangles");
        cx->edges.push_back(edge);
    }

    if (vertex_labels.empty())
        vertex_labels.assign(static_cast<std::size_t>(nv), Label::UNLABELED);
    if (static_cast<int>(vertex_labels.size()) != nv)
        throw Error(ErrorCode::SCHEMA_ERROR, "vertex label count mismatch");
    cx->vertex_labels = std::move(vertex_labels);

    if (triangle_labels.empty())
        triangle_labels.assign(cx->triangles.size(), Label::UNLABELED);
    if (triangle_labels.size() != cx->triangles.size())
        throw Error(ErrorCode::SCHEMA_ERROR, "triangle label count mismatch");
    cx->triangle_labels = std::move(triangle_labels);
    return cx;
}

/** Structural equality of complexes: same vertices, triangles and labels. */
inline bool same_content(const SimplicialComplex& a, const SimplicialComplex& b)
{
    return a.vertices == b.vertices && a.triangles == b.triangles
        && a.vertex_labels == b.vertex_labels
        && a.triangle_labels == b.triangle_labels;
}

/**
 * A subcomplex of one host: a set of its triangles plus optional isolated
 * vertices (vertices listed here need not belong to any listed triangle).
 * Point singletons used by the axiom suites are subcomplexes with one
 * vertex and no triangles.
 */
struct SubComplex {
    ComplexPtr    host;
    std::set<int> triangle_ids;
    std::set<int> vertex_ids;
};

inline void require_same_host(const SubComplex& a, const SubComplex& b)
{
    if (a.host != b.host)
        throw Error(ErrorCode::HOST_MISMATCH,
                    "subcomplexes live in different host complexes");
}

inline void require_valid(const SubComplex& s)
{
    if (!s.host)
        throw Error(ErrorCode::HOST_MISMATCH, "subcomplex has no host");
    for (int t : s.triangle_ids)
        if (t < 0 || t >= s.host->triangle_count())
            throw Error(ErrorCode::UNKNOWN_VERTEX,
                        "triangle id " + std::to_string(t) + " out of range");
    for (int v : s.vertex_ids)
        if (v < 0 || v >= s.host->vertex_count())
            throw Error(ErrorCode::UNKNOWN_VERTEX,
                        "vertex id " + std::to_string(v) + " out of range");
}

inline SubComplex empty_subcomplex(ComplexPtr host)
{
    return {std::move(host), {}, {}};
}

inline SubComplex whole_complex(ComplexPtr host)
{
    SubComplex s{std::move(host), {}, {}};
    for (int t = 0; t < s.host->triangle_count(); ++t)
        s.triangle_ids.insert(t);
    for (int v = 0; v < s.host->vertex_count(); ++v)
        if (s.host->vertex_triangles[static_cast<std::size_t>(v)].empty())
            s.vertex_ids.insert(v);
    return s;
}

inline SubComplex vertex_singleton(ComplexPtr host, int v)
{
    if (v < 0 || v >= host->vertex_count())
        throw Error(ErrorCode::UNKNOWN_VERTEX,
                    "vertex id " + std::to_string(v) + " out of range");
    return {std::move(host), {}, {v}};
}

inline SubComplex triangle_singleton(ComplexPtr host, int t)
{
    if (t < 0 || t >= host->triangle_count())
        throw Error(ErrorCode::UNKNOWN_VERTEX,
                    "triangle id " + std::to_string(t) + " out of range");
    return {std::move(host), {t}, {}};
}

inline SubComplex union_of(const SubComplex& a, const SubComplex& b)
{
    require_same_host(a, b);
    SubComplex out = a;
    out.triangle_ids.insert(b.triangle_ids.begin(), b.triangle_ids.end());
    out.vertex_ids.insert(b.vertex_ids.begin(), b.vertex_ids.end());
    return out;
}

inline bool is_empty(const SubComplex& s)
{
    return s.triangle_ids.empty() && s.vertex_ids.empty();
}

/** A set of simplexes of one host, graded by dimension. */
struct SimplexSet {
    std::set<int>  vertices;
    std::set<Edge> edges;
    std::set<int>  triangles;

    bool empty() const
    {
        return vertices.empty() && edges.empty() && triangles.empty();
    }

    std::size_t size() const
    {
        return vertices.size() + edges.size() + triangles.size();
    }
};

inline bool intersects(const SimplexSet& a, const SimplexSet& b)
{
    auto common = [](const auto& x, const auto& y) {
        auto it = x.begin();
        auto jt = y.begin();
        while (it != x.end() && jt != y.end()) {
            if (*it < *jt)
                ++it;
            else if (*jt < *it)
                ++jt;
            else
                return true;
        }
        return false;
    };
    return common(a.vertices, b.vertices) || common(a.edges, b.edges)
        || common(a.triangles, b.triangles);
}

/** First shared simplex in dimension order, as display text; for reports. */
inline std::optional<std::string> shared_simplex(const SimplexSet& a,
                                                 const SimplexSet& b)
{
    for (int v : a.vertices)
        if (b.vertices.count(v))
            return "vertex " + std::to_string(v);
    for (const Edge& e : a.edges)
        if (b.edges.count(e))
            return "edge (" + std::to_string(e[0]) + ","
                + std::to_string(e[1]) + ")";
    for (int t : a.triangles)
        if (b.triangles.count(t))
            return "triangle " + std::to_string(t);
    return std::nullopt;
}

/**
 * Closure: the listed triangles with all their edges and vertices, plus the
 * isolated vertices.  Smallest subcomplex of the host containing s.
 */
inline SimplexSet sub_closure(const SubComplex& s)
{
    require_valid(s);
    SimplexSet out;
    for (int t : s.triangle_ids) {
        const auto& tri = s.host->triangles[static_cast<std::size_t>(t)];
        out.triangles.insert(t);
        for (int e = 0; e < 3; ++e) {
            out.edges.insert(make_edge(tri[static_cast<std::size_t>(e)],
                                       tri[static_cast<std::size_t>((e + 1) % 3)]));
            out.vertices.insert(tri[static_cast<std::size_t>(e)]);
        }
    }
    out.vertices.insert(s.vertex_ids.begin(), s.vertex_ids.end());
    return out;
}

/**
 * Combinatorial boundary: edges lying in exactly one triangle of s, with
 * their endpoints.  Isolated vertices of s count as boundary; a vertex of
 * the closure is boundary as well when some closure edge at it is.
 */
inline SimplexSet sub_boundary(const SubComplex& s)
{
    require_valid(s);
    std::map<Edge, int> edge_count;
    for (int t : s.triangle_ids) {
        const auto& tri = s.host->triangles[static_cast<std::size_t>(t)];
        for (int e = 0; e < 3; ++e)
            ++edge_count[make_edge(tri[static_cast<std::size_t>(e)],
                                   tri[static_cast<std::size_t>((e + 1) % 3)])];
    }

    SimplexSet out;
    for (const auto& [edge, count] : edge_count) {
        if (count == 1) {
            out.edges.insert(edge);
            out.vertices.insert(edge[0]);
            out.vertices.insert(edge[1]);
        }
    }
    for (int v : s.vertex_ids) {
        bool in_triangle = false;
        for (int t : s.host->vertex_triangles[static_cast<std::size_t>(v)])
            if (s.triangle_ids.count(t)) {
                in_triangle = true;
                break;
            }
        if (!in_triangle)
            out.vertices.insert(v);
    }
    return out;
}

/** Interior: closure minus boundary.  Triangles always survive; an edge
 *  survives iff both its host triangles are in s. */
inline SimplexSet sub_interior(const SubComplex& s)
{
    SimplexSet cl = sub_closure(s);
    SimplexSet bd = sub_boundary(s);
    SimplexSet out;
    for (int v : cl.vertices)
        if (!bd.vertices.count(v))
            out.vertices.insert(v);
    for (const Edge& e : cl.edges)
        if (!bd.edges.count(e))
            out.edges.insert(e);
    out.triangles = cl.triangles;
    return out;
}

}   // namespace shapecx

#endif
