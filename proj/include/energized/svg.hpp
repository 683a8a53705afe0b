#pragma once

// Static SVG output: spectral curves of a tracked wheel and a heatmap of the
// Kaehler form.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "energized/kaehler.hpp"
#include "energized/spectral.hpp"

namespace energized {

namespace detail {
inline std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string label_color(std::size_t k, std::size_t n) {
  const double hue = 360.0 * static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(n, 1));
  return "hsl(" + fmt2(hue) + ",70%,45%)";
}
}  // namespace detail

/// One polyline per eigenvalue label, a cross-hair at the origin and the
/// wheel in the title.
inline std::string phase_svg(const SpectralPath& path, std::string_view wheel_name = {}) {
  const double size = 600, pad = 40;
  double r = 1e-12;
  for (const auto& sample : path.samples)
    for (const auto& z : sample) r = std::max({r, std::fabs(z.real()), std::fabs(z.imag())});
  r *= 1.05;
  auto px = [&](double x) { return pad + (x + r) / (2 * r) * (size - 2 * pad); };
  auto py = [&](double y) { return pad + (r - y) / (2 * r) * (size - 2 * pad); };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
    << size << ' ' << size << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << size / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">wheel "
    << path.wheel + 1;
  if (!wheel_name.empty()) o << ' ' << wheel_name;
  o << ", " << path.steps << " steps</text>\n";
  o << "<line x1=\"" << px(-r) << "\" y1=\"" << py(0) << "\" x2=\"" << px(r) << "\" y2=\"" << py(0)
    << "\" stroke=\"#bbb\"/>\n";
  o << "<line x1=\"" << px(0) << "\" y1=\"" << py(-r) << "\" x2=\"" << px(0) << "\" y2=\"" << py(r)
    << "\" stroke=\"#bbb\"/>\n";
  o << "<circle cx=\"" << px(0) << "\" cy=\"" << py(0) << "\" r=\"3\" fill=\"black\"/>\n";
  const std::size_t n = path.samples.empty() ? 0 : path.samples.front().size();
  for (std::size_t k = 0; k < n; ++k) {
    o << "<polyline fill=\"none\" stroke-width=\"1.5\" stroke=\"" << detail::label_color(k, n) << "\" points=\"";
    for (std::size_t s = 0; s < path.samples.size(); ++s) {
      const auto z = path.samples[s][k];
      o << (s ? " " : "") << detail::fmt2(px(z.real())) << ',' << detail::fmt2(py(z.imag()));
    }
    o << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

/// Grey-scale heatmap of an integer matrix, darker for larger entries.
inline std::string heatmap_svg(const IntMatrix& m, std::string_view title = "Kaehler form") {
  const double cell = std::max(4.0, std::min(24.0, 720.0 / static_cast<double>(std::max<std::size_t>(m.cols(), 1))));
  const double top = 36;
  const double w = cell * static_cast<double>(m.cols()), h = cell * static_cast<double>(m.rows()) + top;
  long long hi = 1;
  for (auto v : m.data()) hi = std::max(hi, v);
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"4\" y=\"22\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const int shade =
          255 - static_cast<int>(std::lround(255.0 * std::sqrt(static_cast<double>(m(i, j)) / static_cast<double>(hi))));
      o << "<rect x=\"" << cell * static_cast<double>(j) << "\" y=\"" << top + cell * static_cast<double>(i)
        << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"rgb(" << shade << ',' << shade << ','
        << shade << ")\"/>\n";
    }
  o << "</svg>\n";
  return o.str();
}

/// t, Re l_1, Im l_1, ..., Re l_n, Im l_n per sample.
inline std::string phase_csv(const SpectralPath& path) {
  std::ostringstream o;
  o.precision(17);
  o << "t";
  const std::size_t n = path.samples.empty() ? 0 : path.samples.front().size();
  for (std::size_t k = 0; k < n; ++k) o << ",re" << k + 1 << ",im" << k + 1;
  o << '\n';
  for (std::size_t s = 0; s < path.samples.size(); ++s) {
    o << path.t(s);
    for (const auto& z : path.samples[s]) o << ',' << z.real() << ',' << z.imag();
    o << '\n';
  }
  return o.str();
}

}  // namespace energized
