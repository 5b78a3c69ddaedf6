// Copyright 2026 The ekbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ekbound/plot.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>

#include "ekbound/error.hpp"

namespace ekbound {

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c",
                                                 "#9467bd", "#ff7f0e", "#8c564b"};

std::string coord(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

struct Box {
  double xmin = -1.0, xmax = 1.0, ymin = -1.0, ymax = 1.0;  // unit circle always drawn

  void add(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
};

}  // namespace

std::string render_svg(const BoundReport& report) {
  Box box;
  for (const auto& e : report.entries) {
    const Complex c = e.disk.center;
    box.add(c.real() - e.disk.radius, c.imag() - e.disk.radius);
    box.add(c.real() + e.disk.radius, c.imag() + e.disk.radius);
  }
  if (report.roots) {
    for (const Complex& r : report.roots->roots) box.add(r.real(), r.imag());
  }
  const double span = std::max(box.xmax - box.xmin, box.ymax - box.ymin);
  const double pad = 0.1 * span;
  const double x0 = box.xmin - pad;
  const double x1 = box.xmax + pad;
  // SVG y grows downward; plot coordinates use y_svg = -imag.
  const double y0 = -(box.ymax + pad);
  const double y1 = -(box.ymin - pad);
  const double width = x1 - x0;
  const double height = y1 - y0;
  const double font = 0.03 * span;
  const double marker = 0.008 * span;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" +
       coord(800.0 * height / width) + "\" viewBox=\"" + coord(x0) + " " + coord(y0) + " " +
       coord(width) + " " + coord(height) + "\">\n";
  s += "<rect class=\"background\" x=\"" + coord(x0) + "\" y=\"" + coord(y0) + "\" width=\"" +
       coord(width) + "\" height=\"" + coord(height) + "\" fill=\"white\"/>\n";
  s += "<g class=\"axes\" stroke=\"#999999\" stroke-width=\"1\" "
       "vector-effect=\"non-scaling-stroke\">\n";
  s += "<line x1=\"" + coord(x0) + "\" y1=\"0.0000\" x2=\"" + coord(x1) +
       "\" y2=\"0.0000\" vector-effect=\"non-scaling-stroke\"/>\n";
  s += "<line x1=\"0.0000\" y1=\"" + coord(y0) + "\" x2=\"0.0000\" y2=\"" + coord(y1) +
       "\" vector-effect=\"non-scaling-stroke\"/>\n";
  s += "</g>\n";
  s += "<circle class=\"unit-circle\" cx=\"0.0000\" cy=\"0.0000\" r=\"1.0000\" fill=\"none\" "
       "stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"6 4\" "
       "vector-effect=\"non-scaling-stroke\"/>\n";

  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    const char* color = kPalette[i % kPalette.size()];
    const double cx = e.disk.center.real();
    const double cy = -e.disk.center.imag();
    const std::string id(theorem_id(theorem_of(e.params)));
    s += "<g class=\"bound\" data-theorem=\"" + id + "\">\n";
    s += "<circle cx=\"" + coord(cx) + "\" cy=\"" + coord(cy) + "\" r=\"" +
         coord(e.disk.radius) + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
    // labels stack above the circle top so coincident disks stay readable
    const double ly = cy - e.disk.radius - (0.4 + 1.2 * static_cast<double>(i)) * font;
    s += "<text x=\"" + coord(cx) + "\" y=\"" + coord(ly) + "\" font-size=\"" + coord(font) +
         "\" text-anchor=\"middle\" fill=\"" + color + "\">" + id + ": |z - (" +
         coord(e.disk.center.real()) + ")| &lt;= " + coord(e.disk.radius) + "</text>\n";
    s += "</g>\n";
  }

  if (report.roots) {
    s += "<g class=\"roots\" fill=\"black\">\n";
    for (const Complex& r : report.roots->roots) {
      s += "<circle class=\"root\" cx=\"" + coord(r.real()) + "\" cy=\"" + coord(-r.imag()) +
           "\" r=\"" + coord(marker) + "\"/>\n";
    }
    s += "</g>\n";
  }
  s += "</svg>\n";
  return s;
}

void write_svg(const BoundReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << render_svg(report);
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
}

}  // namespace ekbound
