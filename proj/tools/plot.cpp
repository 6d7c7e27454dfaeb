#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zl::cli {

namespace {

std::ofstream open_or_throw(const std::string &path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

struct LinMap {
    double lo = 0.0, hi = 1.0, out_lo = 0.0, out_hi = 1.0;
    double operator()(double v) const {
        if (hi == lo) return 0.5 * (out_lo + out_hi);
        return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo);
    }
};

void svg_header(std::ofstream &out, int w, int h, const std::string &title) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n"
        << "<text x=\"12\" y=\"20\" font-family=\"monospace\" font-size=\"13\">" << title
        << "</text>\n";
}

}  // namespace

void write_band_data(const std::string &path, const std::vector<LabeledBand> &bands) {
    auto out = open_or_throw(path);
    out << "# label lo hi\n";
    for (const auto &b : bands) out << b.label << " " << num(b.iv.lo) << " " << num(b.iv.hi) << "\n";
}

void write_band_svg(const std::string &path, const DisjointSet &base,
                    const DisjointSet &image, bool disjoint) {
    const int W = 960, H = 240;
    auto out = open_or_throw(path);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto *s : {&base, &image})
        for (const Interval &iv : s->intervals) {
            lo = std::min(lo, iv.lo);
            hi = std::max(hi, iv.hi);
        }
    const bool empty = !(lo < hi);

    std::string title = std::string(family_name(base.family)) + " intervals (top) and ladder image (bottom)";
    if (empty)
        title += " - empty";
    else
        title += disjoint ? " - segments disjoint" : " - segments overlap";
    svg_header(out, W, H, title);

    // axis
    out << "<line x1=\"40\" y1=\"200\" x2=\"" << (W - 20)
        << "\" y2=\"200\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (!empty) {
        const LinMap m{lo, hi, 40.0, static_cast<double>(W - 20)};
        out << "<text x=\"40\" y=\"218\" font-family=\"monospace\" font-size=\"11\">" << num(lo)
            << "</text>\n<text x=\"" << (W - 180)
            << "\" y=\"218\" font-family=\"monospace\" font-size=\"11\">" << num(hi) << "</text>\n";
        for (const Interval &iv : base.intervals) {
            const double x0 = m(iv.lo), x1 = m(iv.hi);
            out << "<rect x=\"" << x0 << "\" y=\"60\" width=\"" << std::max(x1 - x0, 0.5)
                << "\" height=\"40\" fill=\"#3a7f5c\"/>\n";
        }
        for (const Interval &iv : image.intervals) {
            const double x0 = m(iv.lo), x1 = m(iv.hi);
            out << "<rect x=\"" << x0 << "\" y=\"130\" width=\"" << std::max(x1 - x0, 0.5)
                << "\" height=\"40\" fill=\"#7f3a5c\"/>\n";
        }
    }
    out << "<text x=\"12\" y=\"85\" font-family=\"monospace\" font-size=\"11\">set</text>\n"
        << "<text x=\"12\" y=\"155\" font-family=\"monospace\" font-size=\"11\">img</text>\n"
        << "</svg>\n";
}

void write_series_data(const std::string &path,
                       const std::vector<std::pair<double, double>> &points,
                       const std::string &xlabel, const std::string &ylabel) {
    auto out = open_or_throw(path);
    out << "# " << xlabel << " " << ylabel << "\n";
    for (const auto &[x, y] : points) out << num(x) << " " << num(y) << "\n";
}

void write_series_svg(const std::string &path,
                      const std::vector<std::pair<double, double>> &points,
                      const std::string &xlabel, const std::string &ylabel) {
    const int W = 640, H = 420;
    auto out = open_or_throw(path);
    svg_header(out, W, H, ylabel + " vs " + xlabel + (points.empty() ? " - empty" : ""));
    out << "<line x1=\"60\" y1=\"370\" x2=\"" << (W - 20)
        << "\" y2=\"370\" stroke=\"black\"/>\n"
        << "<line x1=\"60\" y1=\"40\" x2=\"60\" y2=\"370\" stroke=\"black\"/>\n";
    if (!points.empty()) {
        double xlo = points[0].first, xhi = points[0].first;
        double ylo = points[0].second, yhi = points[0].second;
        for (const auto &[x, y] : points) {
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
        const LinMap mx{xlo, xhi, 60.0, static_cast<double>(W - 20)};
        const LinMap my{ylo, yhi, 370.0, 40.0};
        out << "<polyline fill=\"none\" stroke=\"#2b5fa3\" stroke-width=\"1.5\" points=\"";
        for (const auto &[x, y] : points) out << mx(x) << "," << my(y) << " ";
        out << "\"/>\n";
        for (const auto &[x, y] : points)
            out << "<circle cx=\"" << mx(x) << "\" cy=\"" << my(y)
                << "\" r=\"3\" fill=\"#2b5fa3\"/>\n";
        out << "<text x=\"60\" y=\"388\" font-family=\"monospace\" font-size=\"11\">" << num(xlo)
            << "</text>\n<text x=\"" << (W - 160)
            << "\" y=\"388\" font-family=\"monospace\" font-size=\"11\">" << num(xhi)
            << "</text>\n<text x=\"4\" y=\"370\" font-family=\"monospace\" font-size=\"11\">"
            << num(ylo) << "</text>\n<text x=\"4\" y=\"48\" font-family=\"monospace\" font-size=\"11\">"
            << num(yhi) << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace zl::cli
