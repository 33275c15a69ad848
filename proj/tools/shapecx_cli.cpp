// Command line surface for the shape complex pipeline.  Exit codes:
// 0 success, 1 validation failure (with "error: CODE: message" on
// stderr), 2 axiom or nerve consistency failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shapecx/axioms.hpp"
#include "shapecx/fixtures.hpp"
#include "shapecx/homology.hpp"
#include "shapecx/io.hpp"
#include "shapecx/svg.hpp"

namespace {

using namespace shapecx;

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::SCHEMA_ERROR, "cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spill(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::SCHEMA_ERROR, "cannot write \"" + path + "\"");
    out << text;
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-")
        std::cout << text;
    else
        spill(path, text);
}

ShapeComplex load_shape_complex(const std::string& complex_path,
                                const std::string& shape_path)
{
    ComplexPtr    cx  = parse_complex(slurp(complex_path));
    ShapeDocument doc = parse_shape(slurp(shape_path));
    return build_shape_complex(cx, doc.shape);
}

int cmd_triangulate(const std::string& shape_path, const std::string& out)
{
    ShapeDocument doc = parse_shape(slurp(shape_path));
    ShapeComplex  sc  = triangulate_shape(doc.shape, doc.sampling);
    emit(out, complex_to_text(*sc.complex));
    return 0;
}

int cmd_nerves(const std::string& complex_path, const std::string& shape_path,
               const std::string& out, int star_vertex, bool star_given)
{
    ComplexPtr cx = parse_complex(slurp(complex_path));
    if (star_given) {
        NerveComplex nerve = star(cx, star_vertex);
        emit(out, subcomplex_to_text(nerve.as_subcomplex()));
        return 0;
    }
    if (shape_path.empty())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    "nerves needs --shape (or --star for one vertex)");
    ShapeDocument    doc = parse_shape(slurp(shape_path));
    ShapeComplex     sc  = build_shape_complex(cx, doc.shape);
    ShapeNerveComplex snc = shape_nerve_complex(sc);
    emit(out, nerves_to_text(snc));
    return 0;
}

int cmd_mnc(const std::string& complex_path, const std::string& shape_path)
{
    ShapeComplex sc = load_shape_complex(complex_path, shape_path);
    std::vector<NerveComplex> clusters = maximal_nucleus_clusters(sc);
    for (const NerveComplex& n : clusters) {
        std::cout << "nucleus " << n.nucleus << ": " << n.triangle_ids.size()
                  << " triangles {";
        bool first = true;
        for (int t : n.triangle_ids) {
            std::cout << (first ? "" : " ") << t;
            first = false;
        }
        std::cout << "}\n";
    }
    return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& relation, const std::string& features,
                const std::string& quantum)
{
    SubComplexDocument da = parse_subcomplex(slurp(a_path));
    SubComplexDocument db = parse_subcomplex(slurp(b_path));
    if (!same_content(*da.host, *db.host))
        throw Error(ErrorCode::HOST_MISMATCH,
                    "the two documents carry different host complexes");
    SubComplex a = da.bind();
    SubComplex b{da.host, db.triangle_ids, db.vertex_ids};

    ProximityConfig cfg = default_config(*da.host);
    if (!features.empty()) {
        cfg.features.clear();
        std::istringstream ss(features);
        std::string        name;
        while (std::getline(ss, name, ','))
            cfg.features.push_back(parse_feature(name));
        if (cfg.features.empty())
            throw Error(ErrorCode::SCHEMA_ERROR, "empty feature list");
    }
    if (!quantum.empty())
        cfg.quantum = parse_rational(quantum);

    bool        held = false;
    std::string witness;
    if (relation == "near") {
        held = near(a, b);
        if (held)
            witness = *shared_simplex(sub_closure(a), sub_closure(b));
    } else if (relation == "snear") {
        held = strongly_near(a, b);
        if (held) {
            SimplexSet ta{{}, {}, a.triangle_ids};
            SimplexSet tb{{}, {}, b.triangle_ids};
            auto       ws = shared_simplex(ta, tb);
            witness       = ws ? *ws : "shared interior vertex";
        }
    } else if (relation == "dnear" || relation == "dsnear") {
        held = relation == "dnear" ? descriptively_near(a, b, cfg)
                                   : strongly_descriptively_near(a, b, cfg);
        if (held) {
            std::set<int>      ts = descriptive_intersection(a, b, cfg);
            std::ostringstream os;
            os << "matching triangles {";
            bool first = true;
            for (int t : ts) {
                os << (first ? "" : " ") << t;
                first = false;
            }
            os << "}";
            witness = os.str();
        }
    } else {
        throw Error(ErrorCode::SCHEMA_ERROR,
                    "unknown relation \"" + relation + "\"");
    }

    std::cout << (held ? "true" : "false");
    if (!witness.empty())
        std::cout << "  witness: " << witness;
    std::cout << "\n";
    return 0;
}

int cmd_axioms(const std::string& complex_path, const std::string& suite_name,
               int sets, std::uint64_t seed, int max_triangles)
{
    ComplexPtr cx = parse_complex(slurp(complex_path));
    SplitMix64 rng(seed);
    std::vector<SubComplex> family =
        fixtures::random_subcomplex_family(rng, cx, sets, max_triangles);
    ProximityConfig cfg = default_config(*cx);

    AxiomReport report = check_axioms(family, cfg, parse_suite(suite_name));
    std::cout << report.to_text();
    return report.all_passed ? 0 : 2;
}

int cmd_homology(const std::string& complex_path, const std::string& cover)
{
    ComplexPtr cx = parse_complex(slurp(complex_path));
    BettiReport whole = betti(whole_complex(cx));
    std::cout << "b0=" << whole.b0 << " b1=" << whole.b1
              << " \xCF\x87=" << whole.euler << "\n";
    if (cover.empty())
        return 0;
    if (cover != "stars")
        throw Error(ErrorCode::SCHEMA_ERROR,
                    "unknown cover \"" + cover + "\"");

    std::vector<SubComplex> stars;
    for (int v = 0; v < cx->vertex_count(); ++v)
        if (!cx->vertex_triangles[static_cast<std::size_t>(v)].empty())
            stars.push_back(star(cx, v).as_subcomplex());
    NerveTheoremResult res = nerve_theorem_check(stars);
    std::cout << "cover: " << stars.size() << " vertex stars\n"
              << "nerve: b0=" << res.nerve.b0 << " b1=" << res.nerve.b1
              << "\nunion: b0=" << res.cover_union.b0
              << " b1=" << res.cover_union.b1 << "\n"
              << "element contractibility proxy: "
              << (res.hypothesis_ok ? "all pass" : "violated") << "\n"
              << (res.consistent ? "consistent" : "INCONSISTENT") << "\n";
    return res.consistent ? 0 : 2;
}

int cmd_render(const std::string& complex_path, const std::string& nerve_list,
               const std::string& shape_path, bool mnc,
               const std::string& out)
{
    ComplexPtr    cx = parse_complex(slurp(complex_path));
    RenderOptions opts;
    SimplePolygon shape;
    ShapeDocument doc;
    if (!shape_path.empty()) {
        doc        = parse_shape(slurp(shape_path));
        shape      = doc.shape;
        opts.shape = &shape;
    }
    if (!nerve_list.empty()) {
        std::istringstream ss(nerve_list);
        std::string        tok;
        while (std::getline(ss, tok, ',')) {
            try {
                opts.nerve_nuclei.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                            "bad nucleus id \"" + tok + "\"");
            }
        }
    }
    if (mnc) {
        if (shape_path.empty())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        "--mnc needs --shape to identify shape vertices");
        ShapeComplex sc = build_shape_complex(cx, shape);
        for (const NerveComplex& n : maximal_nucleus_clusters(sc))
            opts.mnc_triangles.insert(n.triangle_ids.begin(),
                                      n.triangle_ids.end());
    }
    emit(out, render_svg(*cx, opts));
    return 0;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"planar shape complexes: triangulation, nerves, proximity, "
                 "homology"};
    app.require_subcommand(1);

    std::string shape_path, complex_path, a_path, b_path, out;
    std::string relation = "near", features, quantum, suite = "cech";
    std::string cover, nerve_list;
    int         sets = 20, star_vertex = 0, max_triangles = 6;
    std::uint64_t seed = 0;
    bool          mnc  = false;

    CLI::App* tri = app.add_subcommand("triangulate",
                                       "sample a shape and triangulate it");
    tri->add_option("shape", shape_path, "shape document")->required();
    tri->add_option("-o,--out", out, "output complex document");

    CLI::App* nrv = app.add_subcommand("nerves",
                                       "shape vertex stars and overlaps");
    nrv->add_option("complex", complex_path, "complex document")->required();
    nrv->add_option("--shape", shape_path, "shape document");
    nrv->add_option("--star", star_vertex,
                    "emit one vertex star as a subcomplex document");
    nrv->add_option("-o,--out", out, "output document");

    CLI::App* mn = app.add_subcommand("mnc", "maximal nucleus clusters");
    mn->add_option("complex", complex_path, "complex document")->required();
    mn->add_option("--shape", shape_path, "shape document")->required();

    CLI::App* cmp = app.add_subcommand("compare",
                                       "evaluate a proximity relation");
    cmp->add_option("A", a_path, "first subcomplex document")->required();
    cmp->add_option("B", b_path, "second subcomplex document")->required();
    cmp->add_option("--relation", relation, "near|snear|dnear|dsnear");
    cmp->add_option("--features", features, "comma separated feature names");
    cmp->add_option("--quantum", quantum, "description grid size");

    CLI::App* ax = app.add_subcommand("axioms",
                                      "exhaustive axiom check on a random "
                                      "subcomplex family");
    ax->add_option("complex", complex_path, "complex document")->required();
    ax->add_option("--suite", suite, "cech|lodato|strong|desc|desc-strong");
    ax->add_option("--sets", sets, "family size");
    ax->add_option("--seed", seed, "PRNG seed");
    ax->add_option("--max-triangles", max_triangles,
                   "largest blob size in the family");

    CLI::App* hm = app.add_subcommand("homology",
                                      "Betti numbers, optionally a star "
                                      "cover nerve check");
    hm->add_option("complex", complex_path, "complex document")->required();
    hm->add_option("--cover", cover, "\"stars\" for the vertex star cover");

    CLI::App* rd = app.add_subcommand("render", "SVG drawing");
    rd->add_option("complex", complex_path, "complex document")->required();
    rd->add_option("--nerves", nerve_list, "comma separated nucleus ids");
    rd->add_option("--shape", shape_path, "overlay the shape outline");
    rd->add_flag("--mnc", mnc, "highlight maximal nucleus clusters");
    rd->add_option("-o,--out", out, "output SVG file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (tri->parsed())
            return cmd_triangulate(shape_path, out);
        if (nrv->parsed())
            return cmd_nerves(complex_path, shape_path, out, star_vertex,
                              nrv->count("--star") > 0);
        if (mn->parsed())
            return cmd_mnc(complex_path, shape_path);
        if (cmp->parsed())
            return cmd_compare(a_path, b_path, relation, features, quantum);
        if (ax->parsed())
            return cmd_axioms(complex_path, suite, sets, seed, max_triangles);
        if (hm->parsed())
            return cmd_homology(complex_path, cover);
        if (rd->parsed())
            return cmd_render(complex_path, nerve_list, shape_path, mnc, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: INTERNAL: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
