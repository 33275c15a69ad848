/**
 * Euler characteristic and Betti numbers b0/b1 for subcomplexes and for
 * abstract nerves of covers, plus the desk-scale nerve-theorem check.
 *
 * b0 comes from a union-find over the 1-skeleton; b1 from the rank of the
 * triangle-to-edge boundary matrix over the two-element field, where rank
 * is exact bit arithmetic.  (b0, b1) is used as the homotopy-type proxy:
 * for the planar complexes handled here it determines the homotopy type of
 * each connected component, so equality of (b0, b1) between the abstract
 * nerve of a cover and the union of the cover is the checkable shadow of
 * "nerve and union are homotopy equivalent".
 */

#ifndef SHAPECX_HOMOLOGY_HPP
#define SHAPECX_HOMOLOGY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "shapecx/complex.hpp"

namespace shapecx {

/** Nerve of a cover as a purely combinatorial complex: one vertex per
 *  cover element, truncated at dimension 2. */
struct AbstractComplex {
    int                          n_vertices = 0;
    std::set<Edge>               edges;
    std::set<std::array<int, 3>> triangles;   // ascending triples
};

/** Validates ranges, ascending triples, and downward closure. */
inline AbstractComplex
make_abstract_complex(int n_vertices, std::set<Edge> edges,
                      std::set<std::array<int, 3>> triangles)
{
    AbstractComplex out{n_vertices, std::move(edges), std::move(triangles)};
    for (const Edge& e : out.edges)
        if (e[0] < 0 || e[1] >= n_vertices || e[0] >= e[1])
            throw Error(ErrorCode::SCHEMA_ERROR, "bad abstract edge");
    for (const auto& t : out.triangles) {
        if (t[0] < 0 || t[2] >= n_vertices || !(t[0] < t[1] && t[1] < t[2]))
            throw Error(ErrorCode::SCHEMA_ERROR, "bad abstract triangle");
        for (int e = 0; e < 3; ++e)
            if (!out.edges.count(make_edge(t[static_cast<std::size_t>(e)],
                                           t[static_cast<std::size_t>((e + 1) % 3)])))
                throw Error(ErrorCode::SCHEMA_ERROR,
                            "abstract triangle lacks an edge (downward closure)");
    }
    return out;
}

struct BettiReport {
    long v = 0, e = 0, t = 0;
    long b0 = 0, b1 = 0, b2 = 0;
    long euler = 0;

    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

namespace detail {

/** Rank over the two-element field of the triangle-to-edge boundary
 *  matrix, given each triangle as its three edge indices. */
inline long gf2_rank(const std::vector<std::array<std::size_t, 3>>& tri_edges,
                     std::size_t n_edges)
{
    const std::size_t               words = (n_edges + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots;
    std::vector<std::size_t>                pivot_bits;

    long rank = 0;
    for (const auto& te : tri_edges) {
        std::vector<std::uint64_t> col(words, 0);
        for (std::size_t e : te)
            col[e / 64] ^= (std::uint64_t{1} << (e % 64));

        for (std::size_t k = 0; k < pivots.size(); ++k) {
            std::size_t bit = pivot_bits[k];
            if ((col[bit / 64] >> (bit % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w)
                    col[w] ^= pivots[k][w];
        }

        std::size_t lead = n_edges;
        for (std::size_t w = 0; w < words && lead == n_edges; ++w)
            if (col[w] != 0)
                for (std::size_t b = 0; b < 64; ++b)
                    if ((col[w] >> b) & 1u) {
                        lead = w * 64 + b;
                        break;
                    }
        if (lead != n_edges) {
            pivots.push_back(std::move(col));
            pivot_bits.push_back(lead);
            ++rank;
        }
    }
    return rank;
}

/** Shared engine: vertices (possibly isolated), edges over them, and
 *  triangles given as edge triples. */
inline BettiReport betti_core(std::size_t n_vertices,
                              const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                              const std::vector<std::array<std::size_t, 3>>& tri_edges)
{
    BettiReport rep;
    rep.v = static_cast<long>(n_vertices);
    rep.e = static_cast<long>(edges.size());
    rep.t = static_cast<long>(tri_edges.size());

    std::vector<std::size_t> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges)
        parent[find(u)] = find(v);

    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < n_vertices; ++v)
        roots.insert(find(v));
    rep.b0 = static_cast<long>(roots.size());

    long rank2 = gf2_rank(tri_edges, edges.size());
    rep.b1     = rep.e - rep.v + rep.b0 - rank2;
    rep.b2     = rep.t - rank2;
    rep.euler  = rep.v - rep.e + rep.t;
    return rep;
}

inline BettiReport betti_of_simplex_set(const SimplicialComplex& host,
                                        const SimplexSet& cl)
{
    std::map<int, std::size_t> vindex;
    for (int v : cl.vertices)
        vindex.emplace(v, vindex.size());

    std::map<Edge, std::size_t>                    eindex;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Edge& e : cl.edges) {
        eindex.emplace(e, edges.size());
        edges.emplace_back(vindex.at(e[0]), vindex.at(e[1]));
    }

    std::vector<std::array<std::size_t, 3>> tri_edges;
    for (int t : cl.triangles) {
        const auto& tri = host.triangles[static_cast<std::size_t>(t)];
        tri_edges.push_back(
            {eindex.at(make_edge(tri[0], tri[1])),
             eindex.at(make_edge(tri[1], tri[2])),
             eindex.at(make_edge(tri[2], tri[0]))});
    }
    return betti_core(vindex.size(), edges, tri_edges);
}

}   // namespace detail

inline BettiReport betti(const SubComplex& s)
{
    return detail::betti_of_simplex_set(*s.host, sub_closure(s));
}

inline BettiReport betti(const AbstractComplex& ac)
{
    std::map<Edge, std::size_t>                    eindex;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const Edge& e : ac.edges) {
        eindex.emplace(e, edges.size());
        edges.emplace_back(static_cast<std::size_t>(e[0]),
                           static_cast<std::size_t>(e[1]));
    }
    std::vector<std::array<std::size_t, 3>> tri_edges;
    for (const auto& t : ac.triangles)
        tri_edges.push_back({eindex.at(make_edge(t[0], t[1])),
                             eindex.at(make_edge(t[1], t[2])),
                             eindex.at(make_edge(t[2], t[0]))});
    return detail::betti_core(static_cast<std::size_t>(ac.n_vertices), edges,
                              tri_edges);
}

inline long euler_characteristic(const SubComplex& s)
{
    SimplexSet cl = sub_closure(s);
    return static_cast<long>(cl.vertices.size())
         - static_cast<long>(cl.edges.size())
         + static_cast<long>(cl.triangles.size());
}

inline long euler_characteristic(const AbstractComplex& ac)
{
    return static_cast<long>(ac.n_vertices)
         - static_cast<long>(ac.edges.size())
         + static_cast<long>(ac.triangles.size());
}

/**
 * Abstract nerve of a cover: vertex i per cover element, edge (i,j) when
 * closures i and j share a simplex, triangle (i,j,k) when all three
 * closures share one.  Intersections are taken on closures, so a shared
 * boundary vertex counts.
 */
inline AbstractComplex abstract_nerve(const std::vector<SubComplex>& cover)
{
    if (cover.empty())
        throw Error(ErrorCode::EMPTY_COVER, "cover has no elements");
    for (const SubComplex& s : cover)
        require_same_host(cover[0], s);

    const int               n = static_cast<int>(cover.size());
    std::vector<SimplexSet> cl;
    cl.reserve(cover.size());
    for (const SubComplex& s : cover)
        cl.push_back(sub_closure(s));

    auto intersect_sets = [](const SimplexSet& a, const SimplexSet& b) {
        SimplexSet out;
        std::set_intersection(a.vertices.begin(), a.vertices.end(),
                              b.vertices.begin(), b.vertices.end(),
                              std::inserter(out.vertices, out.vertices.begin()));
        std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(),
                              b.edges.end(),
                              std::inserter(out.edges, out.edges.begin()));
        std::set_intersection(a.triangles.begin(), a.triangles.end(),
                              b.triangles.begin(), b.triangles.end(),
                              std::inserter(out.triangles,
                                            out.triangles.begin()));
        return out;
    };

    std::set<Edge>                    edges;
    std::map<Edge, SimplexSet>        pair_meet;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            SimplexSet meet = intersect_sets(cl[static_cast<std::size_t>(i)],
                                             cl[static_cast<std::size_t>(j)]);
            if (!meet.empty()) {
                edges.insert({i, j});
                pair_meet.emplace(Edge{i, j}, std::move(meet));
            }
        }
    }

    std::set<std::array<int, 3>> triangles;
    for (const auto& [edge, meet] : pair_meet)
        for (int k = edge[1] + 1; k < n; ++k)
            if (pair_meet.count({edge[0], k}) && pair_meet.count({edge[1], k})
                && intersects(meet, cl[static_cast<std::size_t>(k)]))
                triangles.insert({edge[0], edge[1], k});

    return make_abstract_complex(n, std::move(edges), std::move(triangles));
}

struct NerveTheoremResult {
    bool              consistent    = false;
    bool              hypothesis_ok = false;   // all elements pass the proxy
    std::vector<bool> element_ok;              // per element: b0=1 and b1=0
    BettiReport       nerve;
    BettiReport       cover_union;
};

/**
 * Desk-scale nerve-theorem check: compares (b0, b1) of the abstract nerve
 * of the cover against the union of the cover.  The contractibility proxy
 * (each element's closure has b0=1, b1=0) stands in for the closed-convex
 * hypothesis; violations are reported, never rejected.
 */
inline NerveTheoremResult nerve_theorem_check(const std::vector<SubComplex>& cover)
{
    if (cover.empty())
        throw Error(ErrorCode::EMPTY_COVER, "cover has no elements");
    for (const SubComplex& s : cover)
        require_same_host(cover[0], s);

    NerveTheoremResult res;
    res.hypothesis_ok = true;
    for (const SubComplex& s : cover) {
        BettiReport b  = betti(s);
        bool        ok = b.b0 == 1 && b.b1 == 0;
        res.element_ok.push_back(ok);
        if (!ok)
            res.hypothesis_ok = false;
    }

    res.nerve = betti(abstract_nerve(cover));

    SubComplex u = cover[0];
    for (std::size_t i = 1; i < cover.size(); ++i)
        u = union_of(u, cover[i]);
    res.cover_union = betti(u);

    res.consistent = res.nerve.b0 == res.cover_union.b0
                  && res.nerve.b1 == res.cover_union.b1;
    return res;
}

}   // namespace shapecx

#endif
