#include "quatloc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace quatloc {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Box {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool empty = true;
    void add(double x, double y, double pad = 0.0) {
        if (empty) {
            xmin = x - pad;
            xmax = x + pad;
            ymin = y - pad;
            ymax = y + pad;
            empty = false;
        } else {
            xmin = std::min(xmin, x - pad);
            xmax = std::max(xmax, x + pad);
            ymin = std::min(ymin, y - pad);
            ymax = std::max(ymax, y + pad);
        }
    }
};

double cassini_reach(const DiscDescriptor& d) {
    const double sep = std::abs(d.center - d.c2);
    return std::sqrt(std::max(d.value, 0.0)) + sep + 0.1;
}

// Largest r >= 0 with |p - c1||p - c2| = bound along the ray ctr + r*dir.
double cassini_ray_radius(std::complex<double> ctr, std::complex<double> dir,
                          std::complex<double> c1, std::complex<double> c2, double bound,
                          double rmax) {
    auto f = [&](double r) {
        const std::complex<double> p = ctr + r * dir;
        return std::abs(p - c1) * std::abs(p - c2) - bound;
    };
    double hi = rmax;
    if (f(hi) <= 0.0) return hi;
    double lo = hi;
    const int steps = 64;
    for (int s = 1; s <= steps; ++s) {
        lo = rmax * (1.0 - static_cast<double>(s) / steps);
        if (f(lo) <= 0.0) break;
        hi = lo;
    }
    if (f(lo) > 0.0) return 0.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) <= 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::string render_svg(const std::vector<DiscDescriptor>& discs,
                       const std::vector<std::complex<double>>& markers) {
    Box box;
    for (const auto& d : discs) {
        if (d.kind == DiscDescriptor::Kind::disc) {
            box.add(d.center.real(), d.center.imag(), d.value);
        } else {
            const double reach = cassini_reach(d);
            box.add(d.center.real(), d.center.imag(), reach);
            box.add(d.c2.real(), d.c2.imag(), reach);
        }
    }
    for (const auto& m : markers) box.add(m.real(), m.imag(), 0.0);
    if (box.empty) box.add(0.0, 0.0, 1.0);
    double w = box.xmax - box.xmin, h = box.ymax - box.ymin;
    if (w <= 0.0) w = 1.0;
    if (h <= 0.0) h = 1.0;
    const double margin = 0.08 * std::max(w, h);
    const double span = std::max(w, h) + 2.0 * margin;
    const double scale = 600.0 / span;
    const double cx = 0.5 * (box.xmin + box.xmax), cy = 0.5 * (box.ymin + box.ymax);
    auto px = [&](double x) { return 300.0 + (x - cx) * scale; };
    auto py = [&](double y) { return 300.0 - (y - cy) * scale; };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
    svg += "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
    // axes through the origin when visible
    if (box.xmin <= 0.0 && box.xmax >= 0.0)
        svg += "<line x1=\"" + num(px(0)) + "\" y1=\"0\" x2=\"" + num(px(0)) +
               "\" y2=\"600\" stroke=\"#ccc\"/>\n";
    if (box.ymin <= 0.0 && box.ymax >= 0.0)
        svg += "<line x1=\"0\" y1=\"" + num(py(0)) + "\" x2=\"600\" y2=\"" + num(py(0)) +
               "\" stroke=\"#ccc\"/>\n";

    for (const auto& d : discs) {
        if (d.kind == DiscDescriptor::Kind::disc) {
            svg += "<circle class=\"part\" cx=\"" + num(px(d.center.real())) + "\" cy=\"" +
                   num(py(d.center.imag())) + "\" r=\"" + num(std::max(d.value, 0.0) * scale) +
                   "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\"/>\n";
            continue;
        }
        // Cassini oval: one loop around the midpoint when bound > (sep/2)^2,
        // otherwise one loop around each focus; both in a single path element.
        const std::complex<double> c1 = d.center, c2 = d.c2;
        const double sep = std::abs(c1 - c2);
        const double bound = std::max(d.value, 0.0);
        const double rmax = cassini_reach(d);
        std::vector<std::complex<double>> loop_centers;
        if (bound > 0.25 * sep * sep)
            loop_centers = {0.5 * (c1 + c2)};
        else
            loop_centers = {c1, c2};
        std::string path;
        const int npts = 180;
        for (const auto& ctr : loop_centers) {
            for (int s = 0; s <= npts; ++s) {
                const double th = 2.0 * 3.14159265358979323846 * s / npts;
                const std::complex<double> dir(std::cos(th), std::sin(th));
                const double r = cassini_ray_radius(ctr, dir, c1, c2, bound, rmax);
                const std::complex<double> p = ctr + r * dir;
                path += (s == 0 ? "M " : "L ") + num(px(p.real())) + " " + num(py(p.imag())) + " ";
            }
            path += "Z ";
        }
        svg += "<path class=\"part\" d=\"" + path +
               "\" fill=\"none\" stroke=\"#b23f1f\" stroke-width=\"1.5\"/>\n";
    }
    for (const auto& m : markers) {
        const double x = px(m.real()), y = py(m.imag());
        svg += "<path class=\"marker\" d=\"M " + num(x - 4) + " " + num(y) + " L " + num(x + 4) +
               " " + num(y) + " M " + num(x) + " " + num(y - 4) + " L " + num(x) + " " +
               num(y + 4) + "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_csv(const std::vector<DiscDescriptor>& discs) {
    std::string out = "kind,re,im,re2,im2,value\n";
    char buf[200];
    for (const auto& d : discs) {
        if (d.kind == DiscDescriptor::Kind::disc) {
            std::snprintf(buf, sizeof buf, "disc,%.17g,%.17g,,,%.17g\n", d.center.real(),
                          d.center.imag(), d.value);
        } else {
            std::snprintf(buf, sizeof buf, "cassini,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                          d.center.real(), d.center.imag(), d.c2.real(), d.c2.imag(), d.value);
        }
        out += buf;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << content;
}

}  // namespace quatloc
