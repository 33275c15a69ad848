// Acceptance gate: one line per criterion, process exit code = number of
// failed criteria.  All geometric checks are exact; the only tolerances
// are the two wall-clock budgets pinned below.

#include <array>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>
#include <sys/wait.h>

#include "oracles.hpp"
#include "shapecx/axioms.hpp"
#include "shapecx/fixtures.hpp"
#include "shapecx/homology.hpp"
#include "shapecx/io.hpp"

using namespace shapecx;

namespace {

constexpr double kDelaunayBudgetSeconds = 30.0;
constexpr double kAxiomBudgetSeconds    = 60.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/**
 * Brute-force strictly-inside-circumcircle test on the 1/64 lattice.
 * Inputs are scaled to integers of magnitude <= 512, so the lifted
 * determinant is bounded by about 1.3e13 and int64 arithmetic is exact.
 */
long long lattice64(const Rational& r)
{
    Rational s = r * 64;
    return boost::multiprecision::numerator(s).convert_to<long long>();
}

bool strictly_inside_circumcircle(const Point2& a, const Point2& b,
                                  const Point2& c, const Point2& p)
{
    long long adx = lattice64(a.x) - lattice64(p.x);
    long long ady = lattice64(a.y) - lattice64(p.y);
    long long bdx = lattice64(b.x) - lattice64(p.x);
    long long bdy = lattice64(b.y) - lattice64(p.y);
    long long cdx = lattice64(c.x) - lattice64(p.x);
    long long cdy = lattice64(c.y) - lattice64(p.y);
    long long ad2 = adx * adx + ady * ady;
    long long bd2 = bdx * bdx + bdy * bdy;
    long long cd2 = cdx * cdx + cdy * cdy;
    long long det = adx * (bdy * cd2 - bd2 * cdy)
                  - ady * (bdx * cd2 - bd2 * cdx)
                  + ad2 * (bdx * cdy - bdy * cdx);
    return det > 0;   // a, b, c are CCW in every stored triangle
}

bool criterion1()
{
    auto start = Clock::now();
    for (int round = 0; round < 100; ++round) {
        SplitMix64 rng(9000 + static_cast<std::uint64_t>(round));
        int        n = 4 + static_cast<int>(rng.below(197));
        std::vector<Point2> pts = fixtures::random_points(rng, n, 8);
        ComplexPtr          cx  = delaunay(pts);

        for (int t = 0; t < cx->triangle_count(); ++t) {
            Triangle2 g = cx->triangle_geometry(t);
            const auto& tri = cx->triangles[static_cast<std::size_t>(t)];
            for (int v = 0; v < cx->vertex_count(); ++v) {
                if (v == tri[0] || v == tri[1] || v == tri[2])
                    continue;
                if (strictly_inside_circumcircle(
                        g.a, g.b, g.c,
                        cx->vertices[static_cast<std::size_t>(v)])) {
                    std::cout << "[FAIL] criterion 1: seed " << round
                              << ": vertex " << v
                              << " lies strictly inside the circumcircle "
                                 "of triangle "
                              << t << "\n";
                    return false;
                }
            }
        }

        long euler = cx->vertex_count()
                   - static_cast<long>(cx->edges.size())
                   + cx->triangle_count();
        if (euler != 1) {
            std::cout << "[FAIL] criterion 1: seed " << round
                      << ": V-E+T=" << euler << "\n";
            return false;
        }

        Rational doubled_sum = 0;
        for (int t = 0; t < cx->triangle_count(); ++t) {
            Triangle2 g = cx->triangle_geometry(t);
            doubled_sum += (g.b.x - g.a.x) * (g.c.y - g.a.y)
                         - (g.b.y - g.a.y) * (g.c.x - g.a.x);
        }
        if (doubled_sum != oracle::ring_area_doubled(convex_hull(pts))) {
            std::cout << "[FAIL] criterion 1: seed " << round
                      << ": triangle area sum differs from hull area\n";
            return false;
        }
    }
    double t = seconds_since(start);
    if (t >= kDelaunayBudgetSeconds) {
        std::cout << "[FAIL] criterion 1: exceeded the " << kDelaunayBudgetSeconds
                  << " s budget (" << t << " s)\n";
        return false;
    }
    std::cout << "[PASS] criterion 1: 100 seeded triangulations pass the "
                 "brute-force empty-circumcircle, Euler, and exact hull "
                 "area checks ("
              << t << " s)\n";
    return true;
}

bool stars_valid(const ComplexPtr& cx, std::string& why)
{
    for (int v = 0; v < cx->vertex_count(); ++v) {
        const auto& incident =
            cx->vertex_triangles[static_cast<std::size_t>(v)];
        if (incident.empty())
            continue;
        NerveComplex nerve = star(cx, v);
        if (nerve.nucleus != v || nerve.triangle_ids.empty()) {
            why = "star of vertex " + std::to_string(v) + " is malformed";
            return false;
        }
        for (int t = 0; t < cx->triangle_count(); ++t) {
            const auto& tri = cx->triangles[static_cast<std::size_t>(t)];
            bool contains = tri[0] == v || tri[1] == v || tri[2] == v;
            if (contains != (nerve.triangle_ids.count(t) > 0)) {
                why = "star of vertex " + std::to_string(v)
                    + " disagrees with incidence at triangle "
                    + std::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool criterion2()
{
    std::vector<ComplexPtr> hosts{
        fixtures::unit_square_complex(),
        fixtures::hexagon_shape_complex().complex,
        fixtures::annulus_band8_complex(),
        fixtures::annulus_band16_complex(),
        triangulate_shape(fixtures::unit_square_shape(),
                          {Rational(1, 2), Rational(1, 2), Rational(1, 2)})
            .complex,
    };
    SplitMix64 rng(9100);
    for (int round = 0; round < 50; ++round) {
        int n = 10 + static_cast<int>(rng.below(31));
        hosts.push_back(delaunay(fixtures::random_points(rng, n, 8)));
    }
    for (std::size_t i = 0; i < hosts.size(); ++i) {
        std::string why;
        if (!stars_valid(hosts[i], why)) {
            std::cout << "[FAIL] criterion 2: host " << i << ": " << why
                      << "\n";
            return false;
        }
    }
    std::cout << "[PASS] criterion 2: every vertex with an incident "
                 "triangle yields a valid star on all "
              << hosts.size() << " complexes\n";
    return true;
}

bool shape_covered(const ShapeComplex& sc, std::string& why)
{
    for (int t = 0; t < sc.complex->triangle_count(); ++t) {
        if (sc.complex->triangle_labels[static_cast<std::size_t>(t)]
            != Label::SHAPE_INTERIOR)
            continue;
        const auto& tri = sc.complex->triangles[static_cast<std::size_t>(t)];
        bool covered = sc.shape_vertex_ids.count(tri[0])
                    || sc.shape_vertex_ids.count(tri[1])
                    || sc.shape_vertex_ids.count(tri[2]);
        if (!covered) {
            why = "shape triangle " + std::to_string(t)
                + " lies in no shape-vertex star";
            return false;
        }
    }
    return true;
}

bool criterion3()
{
    std::vector<ShapeComplex> fixtures_list{
        triangulate_shape(fixtures::unit_square_shape(),
                          {Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
        fixtures::hexagon_shape_complex(),
        triangulate_shape(fixtures::annulus_shape(),
                          {1, 1, Rational(1, 4)}),
    };
    SplitMix64 rng(9200);
    int        done = 0;
    for (int round = 0; round < 50; ++round) {
        int n = 6 + static_cast<int>(rng.below(7));
        SimplePolygon  poly = fixtures::random_simple_polygon(rng, n, 8);
        SamplingParams sampling{1, 1,
                                round % 2 ? Rational(1, 2) : Rational(0)};
        fixtures_list.push_back(triangulate_shape(poly, sampling));
        ++done;
    }
    for (std::size_t i = 0; i < fixtures_list.size(); ++i) {
        std::string why;
        if (!shape_covered(fixtures_list[i], why)) {
            std::cout << "[FAIL] criterion 3: shape " << i << ": " << why
                      << "\n";
            return false;
        }
    }
    std::cout << "[PASS] criterion 3: shape-vertex stars cover every shape "
                 "triangle on "
              << done << " random polygons and 3 fixtures\n";
    return true;
}

bool criterion4()
{
    auto start = Clock::now();
    SplitMix64 rng(9300);
    long       instances = 0;
    for (int family_i = 0; family_i < 20; ++family_i) {
        ComplexPtr host =
            delaunay(fixtures::random_points(rng, 25, 8));
        int sets = 10 + static_cast<int>(rng.below(21));   // 10..30
        std::vector<SubComplex> family =
            fixtures::random_subcomplex_family(rng, host, sets, 6);
        ProximityConfig cfg = default_config(*host);
        for (AxiomSuite suite :
             {AxiomSuite::CECH, AxiomSuite::LODATO, AxiomSuite::STRONG,
              AxiomSuite::DESC_LODATO, AxiomSuite::DESC_STRONG}) {
            AxiomReport report = check_axioms(family, cfg, suite);
            if (!report.all_passed) {
                std::cout << "[FAIL] criterion 4: family " << family_i
                          << ", suite " << to_string(suite) << ":\n"
                          << report.to_text();
                return false;
            }
            for (const AxiomResult& ax : report.axioms)
                instances += ax.checked;
        }
    }
    double t = seconds_since(start);
    if (t >= kAxiomBudgetSeconds) {
        std::cout << "[FAIL] criterion 4: exceeded the " << kAxiomBudgetSeconds
                  << " s budget (" << t << " s)\n";
        return false;
    }
    std::cout << "[PASS] criterion 4: all five axiom suites hold on 20 "
                 "random families ("
              << instances << " instances, " << t << " s)\n";
    return true;
}

bool criterion5()
{
    SplitMix64 rng(9400);
    long       pairs = 0;

    for (int host_i = 0; host_i < 5; ++host_i) {
        ComplexPtr host = delaunay(fixtures::random_points(rng, 30, 8));
        ProximityConfig cfg = default_config(*host);
        for (int round = 0; round < 40; ++round) {
            SubComplex a = fixtures::random_blob(
                rng, host, 1 + static_cast<int>(rng.below(8)));
            SubComplex b = fixtures::random_blob(
                rng, host, 1 + static_cast<int>(rng.below(8)));
            ++pairs;
            if (strongly_near(a, b)) {
                if (!near(a, b)) {
                    std::cout << "[FAIL] criterion 5: strongly near pair "
                                 "is not near\n";
                    return false;
                }
                if (!descriptively_near(a, b, cfg)) {
                    std::cout << "[FAIL] criterion 5: strongly near pair "
                                 "is not descriptively near\n";
                    return false;
                }
            }
            std::set<int>  meet = descriptive_intersection(a, b, cfg);
            for (int t : a.triangle_ids)
                if (b.triangle_ids.count(t) && !meet.count(t)) {
                    std::cout << "[FAIL] criterion 5: shared triangle " << t
                              << " missing from the descriptive "
                                 "intersection\n";
                    return false;
                }
        }
    }

    // overlapping nerves of a shape complex are strongly near in both the
    // spatial and the descriptive sense
    std::vector<ShapeComplex> shapes{
        build_shape_complex(fixtures::unit_square_complex(),
                            fixtures::unit_square_shape()),
        fixtures::hexagon_shape_complex(),
    };
    for (int i = 0; i < 3; ++i)
        shapes.push_back(triangulate_shape(
            fixtures::random_convex_polygon(rng, 4), {2, 2, 0}));
    long nerve_pairs = 0;
    for (const ShapeComplex& sc : shapes) {
        ShapeNerveComplex snc = shape_nerve_complex(sc);
        ProximityConfig   cfg = default_config(*sc.complex);
        for (const auto& [i, j] : snc.overlap_edges) {
            SubComplex a =
                snc.nerves[static_cast<std::size_t>(i)].as_subcomplex();
            SubComplex b =
                snc.nerves[static_cast<std::size_t>(j)].as_subcomplex();
            ++nerve_pairs;
            if (!strongly_near(a, b)
                || !strongly_descriptively_near(a, b, cfg)) {
                std::cout << "[FAIL] criterion 5: overlapping nerves "
                          << snc.nerves[static_cast<std::size_t>(i)].nucleus
                          << " and "
                          << snc.nerves[static_cast<std::size_t>(j)].nucleus
                          << " break the strong implication\n";
                return false;
            }
        }
    }
    std::cout << "[PASS] criterion 5: implication chain holds on " << pairs
              << " random pairs and " << nerve_pairs
              << " overlapping nerve pairs\n";
    return true;
}

bool betti_matches_oracle(const SubComplex& s)
{
    BettiReport         got  = betti(s);
    oracle::BettiCounts want = oracle::betti_of_subcomplex(s);
    return got.v == want.v && got.e == want.e && got.t == want.t
        && got.b0 == want.b0 && got.b1 == want.b1 && got.b2 == want.b2
        && got.euler == want.euler;
}

std::vector<SubComplex> star_cover(const ComplexPtr& cx)
{
    std::vector<SubComplex> cover;
    for (int v = 0; v < cx->vertex_count(); ++v)
        if (!cx->vertex_triangles[static_cast<std::size_t>(v)].empty())
            cover.push_back(star(cx, v).as_subcomplex());
    return cover;
}

long simplex_count(const SubComplex& s)
{
    SimplexSet cl = sub_closure(s);
    return static_cast<long>(cl.vertices.size() + cl.edges.size()
                             + cl.triangles.size());
}

bool criterion6()
{
    SplitMix64 rng(9500);
    std::vector<SubComplex> oracle_queue;

    for (int i = 0; i < 20; ++i) {
        SimplePolygon poly = fixtures::random_convex_polygon(rng, 4);
        ShapeComplex  sc   = triangulate_shape(poly, {2, 2, 0});
        NerveTheoremResult res = nerve_theorem_check(star_cover(sc.complex));
        if (!res.consistent || res.nerve.b0 != 1 || res.nerve.b1 != 0
            || res.cover_union.b0 != 1 || res.cover_union.b1 != 0) {
            std::cout << "[FAIL] criterion 6: convex fixture " << i
                      << ": nerve (" << res.nerve.b0 << "," << res.nerve.b1
                      << ") union (" << res.cover_union.b0 << ","
                      << res.cover_union.b1 << ")\n";
            return false;
        }
        oracle_queue.push_back(whole_complex(sc.complex));
    }

    ComplexPtr ring = fixtures::annulus_band16_complex();
    NerveTheoremResult res = nerve_theorem_check(star_cover(ring));
    if (!res.consistent || res.nerve.b0 != 1 || res.nerve.b1 != 1
        || res.cover_union.b0 != 1 || res.cover_union.b1 != 1) {
        std::cout << "[FAIL] criterion 6: ring cover: nerve ("
                  << res.nerve.b0 << "," << res.nerve.b1 << ") union ("
                  << res.cover_union.b0 << "," << res.cover_union.b1
                  << ")\n";
        return false;
    }

    oracle_queue.push_back(whole_complex(ring));
    oracle_queue.push_back(
        whole_complex(fixtures::annulus_band8_complex()));
    oracle_queue.push_back(whole_complex(fixtures::unit_square_complex()));
    oracle_queue.push_back(
        whole_complex(fixtures::hexagon_shape_complex().complex));
    ComplexPtr blob_host = delaunay(fixtures::random_points(rng, 40, 8));
    for (int i = 0; i < 30; ++i)
        oracle_queue.push_back(fixtures::random_blob(rng, blob_host, 10));

    long checked = 0;
    for (const SubComplex& s : oracle_queue) {
        if (simplex_count(s) > 200)
            continue;
        ++checked;
        if (!betti_matches_oracle(s)) {
            std::cout << "[FAIL] criterion 6: Betti numbers disagree with "
                         "the elimination oracle\n";
            return false;
        }
    }
    std::cout << "[PASS] criterion 6: 20 convex star covers and the ring "
                 "cover are consistent; Betti numbers match the oracle on "
              << checked << " complexes\n";
    return true;
}

std::string slurp_file(const std::filesystem::path& p)
{
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool criterion7()
{
    namespace fs = std::filesystem;
    fs::path dir = "acceptance_work";
    fs::create_directories(dir);

    auto write = [&](const char* name, const std::string& text) {
        std::ofstream out(dir / name, std::ios::binary);
        out << text;
        return (dir / name).string();
    };

    ShapeDocument hex_doc;
    hex_doc.shape                     = fixtures::hexagon_shape();
    hex_doc.sampling.boundary_step    = 10;
    hex_doc.sampling.interior_spacing = 10;
    std::string shape = write("hex.shape.json", shape_to_text(hex_doc));
    std::string cx    = write(
        "hex.complex.json",
        complex_to_text(*fixtures::hexagon_shape_complex().complex));
    std::string ring = write(
        "ring.complex.json",
        complex_to_text(*fixtures::annulus_band16_complex()));

    ComplexPtr two = make_complex(
        {{0, 0}, {1, 0}, {0, 1}, {10, 0}, {11, 0}, {10, 1}},
        {{0, 1, 2}, {3, 4, 5}});
    std::string sub_a =
        write("a.sub.json", subcomplex_to_text(triangle_singleton(two, 0)));
    std::string sub_b =
        write("b.sub.json", subcomplex_to_text(triangle_singleton(two, 1)));

    std::vector<std::string> commands{
        "triangulate " + shape,
        "nerves " + cx + " --shape " + shape,
        "nerves " + cx + " --star 3",
        "mnc " + cx + " --shape " + shape,
        "compare " + sub_a + " " + sub_b
            + " --relation dnear --features area --quantum 1/100",
        "axioms " + cx + " --suite strong --sets 10 --seed 11",
        "homology " + cx,
        "homology " + ring + " --cover stars",
        "render " + cx + " --nerves 3 --shape " + shape + " --mnc",
    };

    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::array<std::string, 2> captured;
        for (int run = 0; run < 2; ++run) {
            fs::path    out = dir / ("cmd" + std::to_string(i) + "_"
                                     + std::to_string(run) + ".txt");
            std::string full = std::string(SHAPECX_CLI_PATH) + " "
                             + commands[i] + " > " + out.string() + " 2>&1";
            int raw = std::system(full.c_str());
            int status =
                raw == -1 ? -1 : (WIFEXITED(raw) ? WEXITSTATUS(raw) : -1);
            if (status != 0) {
                std::cout << "[FAIL] criterion 7: \"" << commands[i]
                          << "\" exited with " << status << "\n";
                return false;
            }
            captured[static_cast<std::size_t>(run)] = slurp_file(out);
        }
        if (captured[0] != captured[1] || captured[0].empty()) {
            std::cout << "[FAIL] criterion 7: \"" << commands[i]
                      << "\" output differs between runs\n";
            return false;
        }
    }
    std::cout << "[PASS] criterion 7: " << commands.size()
              << " command invocations are byte-identical across runs\n";
    return true;
}

}   // namespace

int main()
{
    std::vector<std::function<bool()>> criteria{
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            if (!criteria[i]())
                ++failures;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << (i + 1)
                      << ": unexpected error: " << e.what() << "\n";
            ++failures;
        }
    }
    if (failures == 0)
        std::cout << "all acceptance criteria hold\n";
    else
        std::cout << failures << " acceptance criteria failed\n";
    return failures;
}
