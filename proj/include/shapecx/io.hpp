/**
 * Structured text documents (JSON, schema_version 1) for shapes, labeled
 * complexes, subcomplexes and nerve reports.
 *
 * Coordinates cross the file boundary as strings, never as floating
 * numbers: decimal strings round-trip exactly, and values whose decimal
 * expansion does not terminate are written as "p/q".  The parser accepts
 * both spellings, so parse(serialize(x)) is the identity on every exact
 * coordinate.
 *
 * Errors carry the offending field in the message: malformed structure
 * maps to SCHEMA_ERROR, malformed numbers to NUMBER_PARSE_ERROR, and
 * geometric violations keep their domain codes (POLYGON_INVALID and so
 * on) from the underlying validators.
 */

#ifndef SHAPECX_IO_HPP
#define SHAPECX_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shapecx/nerve.hpp"
#include "shapecx/proximity.hpp"
#include "shapecx/triangulation.hpp"

namespace shapecx {

using Json = nlohmann::ordered_json;

struct ShapeDocument {
    SimplePolygon           shape;
    SamplingParams          sampling;
    std::vector<Feature>    features{Feature::AREA};
    std::optional<Rational> quantum;   // absent: derived from the complex
};

struct SubComplexDocument {
    ComplexPtr    host;
    std::set<int> triangle_ids;
    std::set<int> vertex_ids;

    SubComplex bind() const { return {host, triangle_ids, vertex_ids}; }
};

namespace detail {

inline const Json& require_field(const Json& j, const char* name,
                                 const std::string& where)
{
    if (!j.is_object())
        throw Error(ErrorCode::SCHEMA_ERROR, where + ": expected an object");
    auto it = j.find(name);
    if (it == j.end())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": missing field \"" + name + "\"");
    return *it;
}

inline Rational number_field(const Json& j, const std::string& where)
{
    if (!j.is_string())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": numbers must be strings");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(ErrorCode::NUMBER_PARSE_ERROR,
                    where + ": " + e.what());
    }
}

inline Point2 point_field(const Json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 2)
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": expected an [x, y] pair");
    return {number_field(j[0], where + "[0]"),
            number_field(j[1], where + "[1]")};
}

inline Ring ring_field(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": expected a list of points");
    Ring ring;
    for (std::size_t i = 0; i < j.size(); ++i)
        ring.push_back(
            point_field(j[i], where + "[" + std::to_string(i) + "]"));
    return ring;
}

inline void check_schema_version(const Json& j, const std::string& where)
{
    const Json& v = require_field(j, "schema_version", where);
    if (!v.is_number_integer() || v.get<int>() != 1)
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": unsupported schema_version");
}

inline Json parse_text(const std::string& text, const std::string& where)
{
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    where + ": malformed document text");
    return j;
}

inline Json point_json(const Point2& p)
{
    return Json::array({format_rational(p.x), format_rational(p.y)});
}

inline Json ring_json(const Ring& r)
{
    Json out = Json::array();
    for (const Point2& p : r)
        out.push_back(point_json(p));
    return out;
}

inline Label parse_label(const std::string& s, const std::string& where)
{
    if (s == "unlabeled")
        return Label::UNLABELED;
    if (s == "shape_interior")
        return Label::SHAPE_INTERIOR;
    if (s == "shape_boundary")
        return Label::SHAPE_BOUNDARY;
    if (s == "exterior")
        return Label::EXTERIOR;
    throw Error(ErrorCode::SCHEMA_ERROR,
                where + ": unknown label \"" + s + "\"");
}

}   // namespace detail

inline ShapeDocument parse_shape(const std::string& text)
{
    Json root = detail::parse_text(text, "shape");
    detail::check_schema_version(root, "shape");

    ShapeDocument doc;
    doc.shape.outer =
        detail::ring_field(detail::require_field(root, "outer", "shape"),
                           "shape.outer");
    if (root.contains("holes")) {
        const Json& holes = root["holes"];
        if (!holes.is_array())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        "shape.holes: expected a list of rings");
        for (std::size_t i = 0; i < holes.size(); ++i)
            doc.shape.holes.push_back(detail::ring_field(
                holes[i], "shape.holes[" + std::to_string(i) + "]"));
    }
    validate_polygon(doc.shape);

    if (root.contains("sampling")) {
        const Json& s = root["sampling"];
        doc.sampling.boundary_step = detail::number_field(
            detail::require_field(s, "boundary_step", "shape.sampling"),
            "shape.sampling.boundary_step");
        doc.sampling.interior_spacing = detail::number_field(
            detail::require_field(s, "interior_spacing", "shape.sampling"),
            "shape.sampling.interior_spacing");
        if (s.contains("margin"))
            doc.sampling.margin = detail::number_field(
                s["margin"], "shape.sampling.margin");
    }
    if (root.contains("features")) {
        const Json& f = root["features"];
        if (!f.is_array() || f.empty())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        "shape.features: expected a nonempty list");
        doc.features.clear();
        for (const Json& name : f) {
            if (!name.is_string())
                throw Error(ErrorCode::SCHEMA_ERROR,
                            "shape.features: names must be strings");
            doc.features.push_back(parse_feature(name.get<std::string>()));
        }
    }
    if (root.contains("quantum"))
        doc.quantum = detail::number_field(root["quantum"], "shape.quantum");
    return doc;
}

inline std::string shape_to_text(const ShapeDocument& doc)
{
    Json root;
    root["schema_version"] = 1;
    root["outer"]          = detail::ring_json(doc.shape.outer);
    if (!doc.shape.holes.empty()) {
        Json holes = Json::array();
        for (const Ring& h : doc.shape.holes)
            holes.push_back(detail::ring_json(h));
        root["holes"] = holes;
    }
    root["sampling"] = {
        {"boundary_step", format_rational(doc.sampling.boundary_step)},
        {"interior_spacing", format_rational(doc.sampling.interior_spacing)},
        {"margin", format_rational(doc.sampling.margin)},
    };
    Json feats = Json::array();
    for (Feature f : doc.features)
        feats.push_back(to_string(f));
    root["features"] = feats;
    if (doc.quantum)
        root["quantum"] = format_rational(*doc.quantum);
    return root.dump(2) + "\n";
}

inline ComplexPtr parse_complex(const std::string& text)
{
    Json root = detail::parse_text(text, "complex");
    detail::check_schema_version(root, "complex");

    std::vector<Point2> vertices;
    const Json& vs = detail::require_field(root, "vertices", "complex");
    if (!vs.is_array())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    "complex.vertices: expected a list");
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(detail::point_field(
            vs[i], "complex.vertices[" + std::to_string(i) + "]"));

    std::vector<std::array<int, 3>> triangles;
    const Json& ts = detail::require_field(root, "triangles", "complex");
    if (!ts.is_array())
        throw Error(ErrorCode::SCHEMA_ERROR,
                    "complex.triangles: expected a list");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const Json& t     = ts[i];
        std::string where = "complex.triangles[" + std::to_string(i) + "]";
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()
            || !t[1].is_number_integer() || !t[2].is_number_integer())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        where + ": expected an [i, j, k] index triple");
        triangles.push_back(
            {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
    }

    auto labels = [&](const char* field, std::size_t) {
        std::vector<Label> out;
        if (!root.contains(field))
            return out;
        const Json& ls = root[field];
        if (!ls.is_array())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        std::string("complex.") + field
                            + ": expected a list");
        for (std::size_t i = 0; i < ls.size(); ++i) {
            std::string where =
                std::string("complex.") + field + "[" + std::to_string(i)
                + "]";
            if (!ls[i].is_string())
                throw Error(ErrorCode::SCHEMA_ERROR,
                            where + ": labels must be strings");
            out.push_back(
                detail::parse_label(ls[i].get<std::string>(), where));
        }
        return out;
    };
    return make_complex(std::move(vertices), std::move(triangles),
                        labels("vertex_labels", vertices.size()),
                        labels("triangle_labels", triangles.size()));
}

inline std::string complex_to_text(const SimplicialComplex& cx)
{
    Json root;
    root["schema_version"] = 1;
    Json vs                = Json::array();
    for (const Point2& p : cx.vertices)
        vs.push_back(detail::point_json(p));
    root["vertices"] = vs;
    Json ts          = Json::array();
    for (const auto& t : cx.triangles)
        ts.push_back(Json::array({t[0], t[1], t[2]}));
    root["triangles"] = ts;
    Json vl           = Json::array();
    for (Label l : cx.vertex_labels)
        vl.push_back(to_string(l));
    root["vertex_labels"] = vl;
    Json tl               = Json::array();
    for (Label l : cx.triangle_labels)
        tl.push_back(to_string(l));
    root["triangle_labels"] = tl;
    return root.dump(2) + "\n";
}

/**
 * A subcomplex travels with its full host complex, so a single file is
 * self-contained.  Two documents whose hosts have identical content can
 * be rebound to one shared host for comparison.
 */
inline SubComplexDocument parse_subcomplex(const std::string& text)
{
    Json root = detail::parse_text(text, "subcomplex");
    detail::check_schema_version(root, "subcomplex");

    SubComplexDocument doc;
    const Json& host = detail::require_field(root, "complex", "subcomplex");
    doc.host         = parse_complex(host.dump());

    auto ids = [&](const char* field) {
        std::set<int> out;
        if (!root.contains(field))
            return out;
        const Json& xs = root[field];
        if (!xs.is_array())
            throw Error(ErrorCode::SCHEMA_ERROR,
                        std::string("subcomplex.") + field
                            + ": expected a list");
        for (const Json& x : xs) {
            if (!x.is_number_integer())
                throw Error(ErrorCode::SCHEMA_ERROR,
                            std::string("subcomplex.") + field
                                + ": ids must be integers");
            out.insert(x.get<int>());
        }
        return out;
    };
    doc.triangle_ids = ids("triangle_ids");
    doc.vertex_ids   = ids("vertex_ids");
    require_valid(doc.bind());
    return doc;
}

inline std::string subcomplex_to_text(const SubComplex& s)
{
    require_valid(s);
    Json root;
    root["schema_version"] = 1;
    root["complex"]        = Json::parse(complex_to_text(*s.host));
    root["triangle_ids"]   = s.triangle_ids;
    root["vertex_ids"]     = s.vertex_ids;
    return root.dump(2) + "\n";
}

inline std::string nerves_to_text(const ShapeNerveComplex& snc)
{
    Json root;
    root["schema_version"] = 1;
    Json nerves            = Json::array();
    for (const NerveComplex& n : snc.nerves) {
        Json one;
        one["nucleus"]      = n.nucleus;
        one["triangle_ids"] = n.triangle_ids;
        nerves.push_back(one);
    }
    root["nerves"]       = nerves;
    Json edges           = Json::array();
    for (const auto& e : snc.overlap_edges)
        edges.push_back(Json::array({e.first, e.second}));
    root["overlap_edges"]     = edges;
    root["overlap_connected"] = snc.overlap_connected;
    root["common_triangles"]  = snc.common_triangles;
    return root.dump(2) + "\n";
}

/** Proximity settings from a shape document, quantum defaulted per host. */
inline ProximityConfig config_from(const ShapeDocument& doc,
                                   const SimplicialComplex& host)
{
    ProximityConfig cfg = default_config(host);
    cfg.features        = doc.features;
    if (doc.quantum)
        cfg.quantum = *doc.quantum;
    return cfg;
}

}   // namespace shapecx

#endif
