/**
 * Vertex stars as nerve subcomplexes, maximal nucleus clusters, and the
 * overlap structure of all stars of a shape.
 *
 * The star of a vertex p collects every triangle incident to p; p is the
 * nucleus.  Every triangle of the star contains the nucleus, so any two
 * stars that share a triangle are adjacent in the overlap graph; stars
 * with the most triangles are the maximal nucleus clusters.
 */

#ifndef SHAPECX_NERVE_HPP
#define SHAPECX_NERVE_HPP

#include <algorithm>
#include <vector>

#include "shapecx/triangulation.hpp"

namespace shapecx {

/** A vertex star: nucleus vertex plus the triangles incident to it. */
struct NerveComplex {
    ComplexPtr    host;
    int           nucleus;
    std::set<int> triangle_ids;

    SubComplex as_subcomplex() const { return {host, triangle_ids, {}}; }
};

/**
 * Star of vertex p: all triangles of the host incident to p.  Throws
 * ISOLATED_VERTEX when p lies in no triangle and UNKNOWN_VERTEX when p is
 * out of range.
 */
inline NerveComplex star(const ComplexPtr& cx, int p)
{
    if (p < 0 || p >= cx->vertex_count())
        throw Error(ErrorCode::UNKNOWN_VERTEX,
                    "vertex id " + std::to_string(p) + " out of range");
    const auto& incident = cx->vertex_triangles[static_cast<std::size_t>(p)];
    if (incident.empty())
        throw Error(ErrorCode::ISOLATED_VERTEX,
                    "vertex " + std::to_string(p) + " lies in no triangle");
    return {cx, p, {incident.begin(), incident.end()}};
}

/**
 * All stars of shape vertices achieving the maximum triangle count,
 * ordered by nucleus id.  Ties are kept, not broken.
 */
inline std::vector<NerveComplex>
maximal_nucleus_clusters(const ShapeComplex& sc)
{
    std::vector<NerveComplex> best;
    std::size_t               best_size = 0;
    for (int p : sc.shape_vertex_ids) {
        NerveComplex nerve = star(sc.complex, p);
        if (nerve.triangle_ids.size() > best_size) {
            best_size = nerve.triangle_ids.size();
            best.clear();
        }
        if (nerve.triangle_ids.size() == best_size)
            best.push_back(std::move(nerve));
    }
    if (best.empty())
        throw Error(ErrorCode::EMPTY_COVER, "shape has no vertices");
    return best;
}

/**
 * Every star of a shape vertex, with the pairwise overlap structure:
 * nerves indexed in nucleus order, an edge between two nerves iff they
 * share a triangle, and the connectivity of that overlap graph.
 * common_triangles holds the triangles shared by all nerves at once
 * (usually empty for more than a few nerves; connectivity of the overlap
 * graph is the meaningful global statement).
 */
struct ShapeNerveComplex {
    std::vector<NerveComplex>        nerves;
    std::vector<std::pair<int, int>> overlap_edges;   // indices into nerves
    bool                             overlap_connected = false;
    std::set<int>                    common_triangles;
};

inline ShapeNerveComplex shape_nerve_complex(const ShapeComplex& sc)
{
    ShapeNerveComplex out;
    for (int p : sc.shape_vertex_ids)
        out.nerves.push_back(star(sc.complex, p));
    const int n = static_cast<int>(out.nerves.size());
    if (n == 0)
        throw Error(ErrorCode::EMPTY_COVER, "shape has no vertices");

    auto share = [](const std::set<int>& a, const std::set<int>& b) {
        auto it = a.begin();
        auto jt = b.begin();
        while (it != a.end() && jt != b.end()) {
            if (*it < *jt)
                ++it;
            else if (*jt < *it)
                ++jt;
            else
                return true;
        }
        return false;
    };

    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(
                    parent[static_cast<std::size_t>(x)])];
        return x;
    };

    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (share(out.nerves[static_cast<std::size_t>(i)].triangle_ids,
                      out.nerves[static_cast<std::size_t>(j)].triangle_ids)) {
                out.overlap_edges.emplace_back(i, j);
                parent[static_cast<std::size_t>(find(i))] = find(j);
            }
        }
    }

    out.overlap_connected = true;
    for (int i = 1; i < n; ++i)
        if (find(i) != find(0))
            out.overlap_connected = false;

    out.common_triangles = out.nerves[0].triangle_ids;
    for (const NerveComplex& nerve : out.nerves) {
        std::set<int> kept;
        std::set_intersection(out.common_triangles.begin(),
                              out.common_triangles.end(),
                              nerve.triangle_ids.begin(),
                              nerve.triangle_ids.end(),
                              std::inserter(kept, kept.begin()));
        out.common_triangles = std::move(kept);
    }
    return out;
}

/** Union of nerve subcomplexes; all must share one host. */
inline SubComplex union_of_nerves(const std::vector<NerveComplex>& nerves)
{
    if (nerves.empty())
        throw Error(ErrorCode::EMPTY_COVER, "no nerves to unite");
    SubComplex out{nerves[0].host, {}, {}};
    for (const NerveComplex& nerve : nerves) {
        if (nerve.host != out.host)
            throw Error(ErrorCode::HOST_MISMATCH,
                        "nerves live in different host complexes");
        out.triangle_ids.insert(nerve.triangle_ids.begin(),
                                nerve.triangle_ids.end());
    }
    return out;
}

}   // namespace shapecx

#endif
