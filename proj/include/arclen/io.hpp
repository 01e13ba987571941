// Text formats: coordinate CSV for curves, trace CSV for iteration
// histories, and SVG rendering.
//
// Coordinates are printed with 17 significant digits, enough to restore
// every double bit-exactly, so write followed by read is the identity.

#pragma once

#include "geometry.hpp"
#include "iteration.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace arclen {

struct ParseError : Error {
    std::size_t line; // 1-based, counting every physical line

    ParseError(std::size_t line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct TooFewVertices : Error {
    using Error::Error;
};

// Shortest decimal form that still round-trips: %.17g.
inline std::string format_coord(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace detail {

inline std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
    return line;
}

inline bool blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

inline double parse_coord(std::string_view token, std::size_t line_no) {
    double v = 0.0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || end != token.data() + token.size())
        throw ParseError(line_no, "bad number '" + std::string(token) + "'");
    return v;
}

// Splits on commas and/or whitespace runs.
inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ','))
            ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',')
            ++i;
        if (i > start)
            out.push_back(line.substr(start, i - start));
    }
    return out;
}

// Hands each physical line (1-based index, no trailing \r) to fn.
template <typename Fn> inline void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        fn(line_no, strip_cr(text.substr(pos, end - pos)));
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
}

} // namespace detail

// One curve per file: a row of comma-separated coordinates per vertex,
// '#' comment lines and blank lines ignored. The curve is closed iff the
// first and last rows coincide within 1e-12 per coordinate.
inline PolygonalCurve read_csv(std::string_view text) {
    std::vector<Point> vertices;
    std::size_t dim = 0;
    detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
        if (detail::blank(line) || line.front() == '#')
            return;
        const auto fields = detail::split_fields(line);
        if (dim == 0) {
            dim = fields.size();
        } else if (fields.size() != dim) {
            throw ParseError(line_no, "expected " + std::to_string(dim) + " coordinates, got " +
                                          std::to_string(fields.size()));
        }
        Point p;
        p.coords.reserve(dim);
        for (const auto f : fields)
            p.coords.push_back(detail::parse_coord(f, line_no));
        vertices.push_back(std::move(p));
    });
    if (vertices.size() < 2)
        throw TooFewVertices("need at least two vertices, got " +
                             std::to_string(vertices.size()));
    return PolygonalCurve::inferring_closed(std::move(vertices));
}

inline std::string write_csv(const PolygonalCurve& c) {
    std::string out;
    for (const Point& p : c.vertices()) {
        for (std::size_t i = 0; i < p.dim(); ++i) {
            if (i)
                out += ',';
            out += format_coord(p[i]);
        }
        out += '\n';
    }
    return out;
}

// A named curve with free-form string metadata. Serialized as coordinate
// CSV preceded by '# name:' and '# meta key: value' comment lines, so a
// document is also a plain curve CSV to readers that skip comments.
struct CurveDocument {
    PolygonalCurve curve;
    std::string name;
    std::map<std::string, std::string> metadata;
};

inline CurveDocument read_document(std::string_view text) {
    CurveDocument doc{read_csv(text), "", {}};
    detail::for_each_line(text, [&](std::size_t, std::string_view line) {
        if (detail::blank(line) || line.front() != '#')
            return;
        std::string_view body = line.substr(1);
        if (!body.empty() && body.front() == ' ')
            body.remove_prefix(1);
        if (body.rfind("name:", 0) == 0) {
            body.remove_prefix(5);
            if (!body.empty() && body.front() == ' ')
                body.remove_prefix(1);
            doc.name = std::string(body);
        } else if (body.rfind("meta ", 0) == 0) {
            body.remove_prefix(5);
            const std::size_t colon = body.find(':');
            if (colon == std::string_view::npos)
                return;
            std::string_view value = body.substr(colon + 1);
            if (!value.empty() && value.front() == ' ')
                value.remove_prefix(1);
            doc.metadata[std::string(body.substr(0, colon))] = std::string(value);
        }
    });
    return doc;
}

inline std::string write_document(const CurveDocument& doc) {
    const auto check_text = [](std::string_view s, const char* what) {
        if (s.find('\n') != std::string_view::npos || s.find('\r') != std::string_view::npos)
            throw Error(std::string(what) + " must not contain line breaks");
    };
    check_text(doc.name, "document name");
    std::string out;
    if (!doc.name.empty()) {
        out += "# name: ";
        out += doc.name;
        out += '\n';
    }
    for (const auto& [key, value] : doc.metadata) {
        check_text(key, "metadata key");
        check_text(value, "metadata value");
        if (key.find(':') != std::string::npos)
            throw Error("metadata key must not contain ':'");
        out += "# meta ";
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    }
    out += write_csv(doc.curve);
    return out;
}

// One row per recorded iterate. sigma_ratio is sigma_n / sigma_{n-1},
// blank for the first row and after a zero sigma.
inline std::string write_trace_csv(const IterationTrace& trace) {
    std::string out = "n,sigma,sigma_ratio,max,min,length,displacement\n";
    for (std::size_t i = 0; i < trace.records.size(); ++i) {
        const IterationRecord& r = trace.records[i];
        out += std::to_string(r.n);
        out += ',';
        out += format_coord(r.stats.sigma);
        out += ',';
        if (i > 0 && trace.records[i - 1].stats.sigma > 0.0)
            out += format_coord(r.stats.sigma / trace.records[i - 1].stats.sigma);
        out += ',';
        out += format_coord(r.stats.max);
        out += ',';
        out += format_coord(r.stats.min);
        out += ',';
        out += format_coord(r.length);
        out += ',';
        out += format_coord(r.displacement);
        out += '\n';
    }
    return out;
}

struct SvgStyle {
    std::string stroke = "#1f77b4";
    double stroke_width = 0.0;  // 0 picks a width from the drawing extent
    double vertex_radius = 0.0; // likewise
};

struct SvgOptions {
    double margin = 0.05; // fraction of the larger drawing extent
    double pixels = 640.0; // size of the larger output dimension
    // axes to project onto for curves with dim != 2
    std::optional<std::pair<std::size_t, std::size_t>> projection;
};

namespace detail {

inline std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        case '\'':
            out += "&apos;";
            break;
        default:
            out += ch;
        }
    }
    return out;
}

inline std::string svg_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace detail

// Renders each curve as a polyline with circles at the vertices. Vertical
// coordinates are negated so the y axis points up in the finished image.
// Curves must be planar unless a projection picks two axes.
inline std::string render_svg(const std::vector<std::pair<PolygonalCurve, SvgStyle>>& curves,
                              const SvgOptions& opts = {}) {
    // project to xy and flip
    std::vector<std::vector<std::pair<double, double>>> flat;
    flat.reserve(curves.size());
    for (const auto& [curve, style] : curves) {
        std::size_t ax = 0, ay = 1;
        if (opts.projection) {
            ax = opts.projection->first;
            ay = opts.projection->second;
            if (ax >= curve.dim() || ay >= curve.dim())
                throw UnsupportedDimension("projection axes exceed curve dimension");
        } else if (curve.dim() != 2) {
            throw UnsupportedDimension("can only render planar curves; pass a projection");
        }
        auto& pts = flat.emplace_back();
        pts.reserve(curve.vertex_count());
        for (const Point& p : curve.vertices())
            pts.emplace_back(p[ax], -p[ay]);
    }

    double min_x = 0.0, min_y = 0.0, max_x = 1.0, max_y = 1.0;
    bool first = true;
    for (const auto& pts : flat)
        for (const auto& [x, y] : pts) {
            if (first) {
                min_x = max_x = x;
                min_y = max_y = y;
                first = false;
            } else {
                min_x = std::min(min_x, x);
                max_x = std::max(max_x, x);
                min_y = std::min(min_y, y);
                max_y = std::max(max_y, y);
            }
        }
    const double span_x = max_x - min_x;
    const double span_y = max_y - min_y;
    double extent = std::max(span_x, span_y);
    if (extent <= 0.0)
        extent = 1.0;
    const double margin = opts.margin * extent;
    const double view_w = span_x + 2.0 * margin;
    const double view_h = span_y + 2.0 * margin;
    const double px_scale = opts.pixels / std::max(view_w, view_h);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::svg_num(view_w * px_scale) + "\" height=\"" + detail::svg_num(view_h * px_scale) +
           "\" viewBox=\"" + detail::svg_num(min_x - margin) + " " + detail::svg_num(min_y - margin) +
           " " + detail::svg_num(view_w) + " " + detail::svg_num(view_h) + "\">\n";
    for (std::size_t ci = 0; ci < curves.size(); ++ci) {
        const SvgStyle& style = curves[ci].second;
        const double stroke_w =
            style.stroke_width > 0.0 ? style.stroke_width : extent / 160.0;
        const double radius =
            style.vertex_radius > 0.0 ? style.vertex_radius : extent / 110.0;
        const std::string stroke = detail::xml_escape(style.stroke);
        out += "  <polyline fill=\"none\" stroke=\"" + stroke + "\" stroke-width=\"" +
               detail::svg_num(stroke_w) + "\" points=\"";
        for (std::size_t i = 0; i < flat[ci].size(); ++i) {
            if (i)
                out += ' ';
            out += detail::svg_num(flat[ci][i].first) + "," + detail::svg_num(flat[ci][i].second);
        }
        out += "\"/>\n";
        for (const auto& [x, y] : flat[ci])
            out += "  <circle cx=\"" + detail::svg_num(x) + "\" cy=\"" + detail::svg_num(y) +
                   "\" r=\"" + detail::svg_num(radius) + "\" fill=\"" + stroke + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

inline std::string render_svg(const PolygonalCurve& curve, const SvgOptions& opts = {}) {
    return render_svg({{curve, SvgStyle{}}}, opts);
}

} // namespace arclen
