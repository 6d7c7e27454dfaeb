/*
 * plot.hpp — plain-text plot data and self-contained SVG renderings.
 *
 * Two products: interval-band views of a DisjointSet next to its ladder
 * image (receding-segments picture), and generic (x, y) series such as
 * rel_dev vs T.  Empty inputs produce headers-only data files and
 * empty-axes SVGs.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zl/sets.hpp"

namespace zl::cli {

struct LabeledBand {
    std::string label;
    Interval iv;
};

// Rows "label lo hi"; header only when empty.
void write_band_data(const std::string &path, const std::vector<LabeledBand> &bands);

// Horizontal band groups for the base set (top) and its image (bottom).
void write_band_svg(const std::string &path, const DisjointSet &base,
                    const DisjointSet &image, bool disjoint);

// Rows "x y"; header only when empty.
void write_series_data(const std::string &path,
                       const std::vector<std::pair<double, double>> &points,
                       const std::string &xlabel, const std::string &ylabel);

void write_series_svg(const std::string &path,
                      const std::vector<std::pair<double, double>> &points,
                      const std::string &xlabel, const std::string &ylabel);

}  // namespace zl::cli
