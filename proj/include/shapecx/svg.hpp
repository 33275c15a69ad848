/**
 * Deterministic SVG 1.1 rendering of a complex with optional overlays:
 * the source shape outline, nerve fills keyed by nucleus, and a maximal
 * nucleus cluster highlight.  Identical input produces byte-identical
 * output; all coordinates go through the exact fixed-point formatter, so
 * no platform printf variation can leak in.
 */

#ifndef SHAPECX_SVG_HPP
#define SHAPECX_SVG_HPP

#include <array>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "shapecx/complex.hpp"
#include "shapecx/polygon.hpp"

namespace shapecx {

struct RenderOptions {
    const SimplePolygon* shape = nullptr;   // outline overlay when set
    std::vector<int>     nerve_nuclei;      // stars to fill, one hue each
    std::set<int>        mnc_triangles;     // cluster highlight fill
};

namespace detail {

inline const std::array<const char*, 8>& nerve_palette()
{
    static const std::array<const char*, 8> palette{
        "#e6194b", "#3cb44b", "#4363d8", "#f58231",
        "#911eb4", "#46f0f0", "#f032e6", "#9a6324"};
    return palette;
}

class SvgCanvas {
  public:
    SvgCanvas(const std::vector<Point2>& pts)
    {
        minx_ = maxx_ = pts[0].x;
        miny_ = maxy_ = pts[0].y;
        for (const Point2& p : pts) {
            minx_ = std::min(minx_, p.x);
            maxx_ = std::max(maxx_, p.x);
            miny_ = std::min(miny_, p.y);
            maxy_ = std::max(maxy_, p.y);
        }
        Rational w   = maxx_ - minx_;
        Rational h   = maxy_ - miny_;
        Rational ext = std::max(w, h);
        if (ext == 0)
            ext = 1;
        pad_   = ext / 20;
        scale_ = Rational(600) / ext;
        width_ = (w + 2 * pad_) * scale_;
        height_ = (h + 2 * pad_) * scale_;
    }

    // Model y grows upward, SVG y grows downward; flip around the top.
    std::string x(const Rational& v) const
    {
        return decimal_approx((v - minx_ + pad_) * scale_, 2);
    }
    std::string y(const Rational& v) const
    {
        return decimal_approx((maxy_ - v + pad_) * scale_, 2);
    }
    std::string width() const { return decimal_approx(width_, 2); }
    std::string height() const { return decimal_approx(height_, 2); }

  private:
    Rational minx_, maxx_, miny_, maxy_, pad_, scale_, width_, height_;
};

inline void triangle_path(std::ostringstream& os, const SvgCanvas& canvas,
                          const Triangle2& t, const std::string& attrs)
{
    os << "<path d=\"M " << canvas.x(t.a.x) << ' ' << canvas.y(t.a.y)
       << " L " << canvas.x(t.b.x) << ' ' << canvas.y(t.b.y) << " L "
       << canvas.x(t.c.x) << ' ' << canvas.y(t.c.y) << " Z\" " << attrs
       << "/>\n";
}

inline void ring_path(std::ostringstream& os, const SvgCanvas& canvas,
                      const Ring& ring)
{
    for (std::size_t i = 0; i < ring.size(); ++i)
        os << (i == 0 ? "M " : " L ") << canvas.x(ring[i].x) << ' '
           << canvas.y(ring[i].y);
    os << " Z";
}

}   // namespace detail

inline std::string render_svg(const SimplicialComplex& cx,
                              const RenderOptions& opts = {})
{
    for (int p : opts.nerve_nuclei)
        if (p < 0 || p >= cx.vertex_count())
            throw Error(ErrorCode::UNKNOWN_VERTEX,
                        "nerve nucleus " + std::to_string(p)
                            + " out of range");
    for (int t : opts.mnc_triangles)
        if (t < 0 || t >= cx.triangle_count())
            throw Error(ErrorCode::UNKNOWN_VERTEX,
                        "highlight triangle " + std::to_string(t)
                            + " out of range");
    if (cx.vertices.empty())
        throw Error(ErrorCode::TOO_FEW_VERTICES, "nothing to draw");

    detail::SvgCanvas  canvas(cx.vertices);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       << "width=\"" << canvas.width() << "\" height=\"" << canvas.height()
       << "\">\n";

    // Fills go under strokes: cluster highlight first, then nerve hues.
    for (int t : opts.mnc_triangles)
        detail::triangle_path(
            os, canvas, cx.triangle_geometry(t),
            "fill=\"#ffd54d\" fill-opacity=\"0.5\" stroke=\"none\"");
    for (std::size_t i = 0; i < opts.nerve_nuclei.size(); ++i) {
        const char* hue  = detail::nerve_palette()[i % 8];
        int         p    = opts.nerve_nuclei[i];
        const auto& star = cx.vertex_triangles[static_cast<std::size_t>(p)];
        if (star.empty())
            throw Error(ErrorCode::ISOLATED_VERTEX,
                        "nucleus " + std::to_string(p)
                            + " lies in no triangle");
        for (int t : star)
            detail::triangle_path(os, canvas, cx.triangle_geometry(t),
                                  std::string("fill=\"") + hue
                                      + "\" fill-opacity=\"0.5\" "
                                        "stroke=\"none\"");
    }

    for (int t = 0; t < cx.triangle_count(); ++t)
        detail::triangle_path(
            os, canvas, cx.triangle_geometry(t),
            "fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"");

    if (opts.shape) {
        os << "<path d=\"";
        detail::ring_path(os, canvas, opts.shape->outer);
        for (const Ring& hole : opts.shape->holes) {
            os << ' ';
            detail::ring_path(os, canvas, hole);
        }
        os << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    }

    for (const Point2& p : cx.vertices)
        os << "<circle cx=\"" << canvas.x(p.x) << "\" cy=\"" << canvas.y(p.y)
           << "\" r=\"2\" fill=\"#222222\"/>\n";

    // Open-circle nucleus markers sit on top of everything.
    for (int p : opts.nerve_nuclei) {
        const Point2& v = cx.vertices[static_cast<std::size_t>(p)];
        os << "<circle cx=\"" << canvas.x(v.x) << "\" cy=\"" << canvas.y(v.y)
           << "\" r=\"5\" fill=\"#ffffff\" stroke=\"#000000\" "
              "stroke-width=\"1.5\"/>\n";
    }

    os << "</svg>\n";
    return os.str();
}

}   // namespace shapecx

#endif
