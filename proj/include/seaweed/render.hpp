// Deterministic SVG pictures: the horizontal meander diagram of one run and a
// vertical straightening diagram per edge.  Every drawn arc carries a
// machine-readable data-arc attribute so tests can compare normalized arc
// lists instead of raw bytes.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "pipeline.hpp"

namespace seaweed {

namespace detail {

inline std::string num(long v) { return std::to_string(v); }

// upper or lower semicircle from x1 to x2 at baseline y
inline std::string arc_path(long x1, long x2, long y, bool above) {
    long r = (x2 > x1 ? x2 - x1 : x1 - x2) / 2;
    // above arcs bulge up; the sweep flag depends on the drawing direction
    int sweep = (above == (x1 < x2)) ? 1 : 0;
    return "M " + num(x1) + " " + num(y) + " A " + num(r) + " " + num(r) + " 0 0 " +
           num(sweep) + " " + num(x2) + " " + num(y);
}

inline void emit_arc(std::string& svg, long x1, long x2, long y, bool above, bool dashed,
                     bool arrow, const std::string& tag) {
    svg += "  <path d=\"" + arc_path(x1, x2, y, above) + "\" fill=\"none\" stroke=\"" +
           (dashed ? std::string("#888") : std::string("#000")) + "\"";
    if (dashed) svg += " stroke-dasharray=\"4 3\"";
    if (arrow) svg += " marker-end=\"url(#arrow)\"";
    svg += " data-arc=\"" + tag + "\"/>\n";
}

// vertical semicircle on the line x, bulging left or right
inline void emit_varc(std::string& svg, long x, long y1, long y2, bool left, bool arrow,
                      const std::string& tag) {
    long r = (y2 > y1 ? y2 - y1 : y1 - y2) / 2;
    int sweep = (left == (y1 < y2)) ? 0 : 1;
    svg += "  <path d=\"M " + num(x) + " " + num(y1) + " A " + num(r) + " " + num(r) +
           " 0 0 " + num(sweep) + " " + num(x) + " " + num(y2) +
           "\" fill=\"none\" stroke=\"#000\"";
    if (arrow) svg += " marker-end=\"url(#arrow)\"";
    svg += " data-arc=\"" + tag + "\"/>\n";
}

inline void emit_cross(std::string& svg, long x, long y, const std::string& tag) {
    svg += "  <path d=\"M " + num(x - 5) + " " + num(y - 5) + " L " + num(x + 5) + " " +
           num(y + 5) + " M " + num(x - 5) + " " + num(y + 5) + " L " + num(x + 5) + " " +
           num(y - 5) + "\" stroke=\"#c00\" data-arc=\"" + tag + "\"/>\n";
}

inline std::string svg_open(long w, long h) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" +
           num(h) + "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n"
           "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
}

}  // namespace detail

// Horizontal picture: the n points on L, the modified integer arcs with their
// arrow directions, the dashed half-integer arcs, and crosses on the marks.
inline std::string render_horizontal(const RunResult& res) {
    const int n = res.dp.n;
    auto X = [](int p) { return 40L * p; };        // integer point p
    auto Xh = [](int i) { return 40L * i + 20; };  // half point between i, i+1
    const long y = 200;
    std::string svg = detail::svg_open(40L * (n + 1), 400);
    svg += "  <line x1=\"" + detail::num(X(1) - 20) + "\" y1=\"" + detail::num(y) +
           "\" x2=\"" + detail::num(X(n) + 20) + "\" y2=\"" + detail::num(y) +
           "\" stroke=\"#ccc\" data-arc=\"line\"/>\n";
    for (int p = 1; p <= n; ++p) {
        svg += "  <circle cx=\"" + detail::num(X(p)) + "\" cy=\"" + detail::num(y) +
               "\" r=\"3\"/>\n  <text x=\"" + detail::num(X(p) - 4) + "\" y=\"" +
               detail::num(y + 20) + "\" font-size=\"12\">" + std::to_string(p) + "</text>\n";
    }
    // modified integer arcs, drawn with their arrow direction
    for (int side = 0; side < 2; ++side) {
        bool above = side == 0;
        const IntegerInvolution& s = above ? res.sigmaPlus : res.sigmaMinus;
        for (int p = 1; p <= n; ++p) {
            int q = s(p);
            if (q <= p) continue;
            long x1 = above ? X(p) : X(q), x2 = above ? X(q) : X(p);
            detail::emit_arc(svg, x1, x2, y, above, false, true,
                             std::string(above ? "above " : "below ") + std::to_string(p) +
                                 " " + std::to_string(q));
        }
    }
    // dashed half-integer arcs
    for (int side = 0; side < 2; ++side) {
        bool above = side == 0;
        const auto& arcs = above ? res.ess.iplus : res.ess.iminus;
        const auto& fict = above ? res.ess.fict_plus : res.ess.fict_minus;
        for (int i = 1; i < static_cast<int>(arcs.size()); ++i) {
            int j = arcs[i];
            if (j == 0 || j < i) continue;
            bool f = fict[i] != 0;
            long xi = i <= n - 1 ? Xh(i) : Xh(0) - 40L * (i - n + 1);   // fictitious slots left
            long xj = j <= n - 1 ? Xh(j) : Xh(0) - 40L * (j - n + 1);
            std::string tag = std::string(above ? "half+ " : "half- ") + std::to_string(i) +
                              " " + std::to_string(j) + (f ? " fict" : "");
            if (i == j)
                detail::emit_cross(svg, xi, above ? y - 14 : y + 14, tag);
            else
                detail::emit_arc(svg, xi, xj, y, above, true, false, tag);
        }
    }
    // crosses on the marked integer arcs
    for (const auto& mk : res.marks.marks) {
        long apex = (X(mk.p) + X(mk.q)) / 2;
        long ay = mk.above ? y - (X(mk.q) - X(mk.p)) / 2 : y + (X(mk.q) - X(mk.p)) / 2;
        detail::emit_cross(svg, apex, ay,
                           std::string("mark ") + (mk.above ? "above " : "below ") +
                               std::to_string(mk.p) + " " + std::to_string(mk.q));
    }
    svg += "</svg>\n";
    return svg;
}

// Vertical picture of one edge: positions top to bottom, an arrow per line,
// crosses on the replaced values, and the external arcs on the two sides.
inline std::string render_edge(const Edge& E, const StraightenedEdge& se) {
    int e = E.e();
    auto Y = [](int t) { return 40L * t; };  // position t in [1,e]
    const long x = 160;
    std::string svg = detail::svg_open(320, Y(e) + 40);
    std::map<int, int> pos;  // L-point -> position
    for (int t = 1; t <= e; ++t) pos[E.phi[t - 1]] = t;
    for (int t = 1; t <= e; ++t) {
        svg += "  <circle cx=\"" + detail::num(x) + "\" cy=\"" + detail::num(Y(t)) +
               "\" r=\"3\"/>\n  <text x=\"" + detail::num(x + 8) + "\" y=\"" +
               detail::num(Y(t) + 4) + "\" font-size=\"12\">" + std::to_string(E.phi[t - 1]) +
               "</text>\n";
    }
    for (int t = 1; t <= e - 1; ++t) {
        // arrow of line t: down when eps_t beta_t points to phi(t+1)
        bool down = E.s_root(t).j == E.phi[t];
        long y1 = down ? Y(t) : Y(t + 1), y2 = down ? Y(t + 1) : Y(t);
        svg += "  <line x1=\"" + detail::num(x) + "\" y1=\"" + detail::num(y1) + "\" x2=\"" +
               detail::num(x) + "\" y2=\"" + detail::num(y2) +
               "\" stroke=\"#000\" marker-end=\"url(#arrow)\" data-arc=\"line " +
               std::to_string(t) + " " + E.s_root(t).str() + "\"/>\n";
        if (se.altered[t])
            detail::emit_cross(svg, x - 12, (Y(t) + Y(t + 1)) / 2,
                               "replaced " + std::to_string(t) + " " + se.piStar[t].str());
    }
    for (const auto& a : se.external) {
        long y1 = Y(pos[a.from]), y2 = Y(pos[a.to]);
        detail::emit_varc(svg, x, y1, y2, a.left, true,
                          std::string(a.left ? "ext-left " : "ext-right ") +
                              std::to_string(a.from) + " " + std::to_string(a.to));
    }
    svg += "</svg>\n";
    return svg;
}

// All pictures of a run, keyed by file name.
inline std::map<std::string, std::string> render_all(const RunResult& res) {
    std::map<std::string, std::string> out;
    out["meander.svg"] = render_horizontal(res);
    for (std::size_t k = 0; k < res.edges.size(); ++k)
        out["edge" + std::to_string(k) + ".svg"] =
            render_edge(res.edges[k], res.straightened[k]);
    return out;
}

// Normalized arc list of an SVG produced above: the sorted data-arc tags.
inline std::vector<std::string> arc_list(const std::string& svg) {
    std::vector<std::string> out;
    const std::string key = "data-arc=\"";
    for (std::size_t p = svg.find(key); p != std::string::npos; p = svg.find(key, p + 1)) {
        std::size_t q = svg.find('"', p + key.size());
        out.push_back(svg.substr(p + key.size(), q - p - key.size()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace seaweed
