#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gpdc/errors.hpp"
#include "gpdc/persistence.hpp"

namespace gpdc {

namespace {

std::string fmt(double x) {
  if (std::isinf(x)) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

double parse_value(const std::string& tok, const std::string& path, std::size_t line) {
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(path + ":" + std::to_string(line) + ": bad number '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(path + ":" + std::to_string(line) + ": bad number '" + tok + "'");
  return v;
}

}  // namespace

void save_diagram_csv(const PersistenceDiagram& d, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "degree,birth,death\n";
  for (std::size_t deg = 0; deg < d.degrees.size(); ++deg)
    for (const PersistenceBar& b : d.degrees[deg])
      out << deg << ',' << fmt(b.birth) << ',' << fmt(b.death) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

PersistenceDiagram load_diagram_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path + ":1: empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "degree,birth,death")
    throw ParseError(path + ":1: expected header 'degree,birth,death'");

  PersistenceDiagram d;
  d.maxdim = 0;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string f0, f1, f2, extra;
    if (!std::getline(ss, f0, ',') || !std::getline(ss, f1, ',') || !std::getline(ss, f2, ','))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 3 fields");
    if (std::getline(ss, extra, ','))
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected 3 fields");

    long deg = -1;
    try {
      std::size_t used = 0;
      deg = std::stol(f0, &used);
      if (used != f0.size()) deg = -1;
    } catch (const std::exception&) {
      deg = -1;
    }
    if (deg < 0 || deg > 64)
      throw ParseError(path + ":" + std::to_string(lineno) + ": bad degree '" + f0 + "'");

    double birth = parse_value(f1, path, lineno);
    double death = parse_value(f2, path, lineno);
    if (std::isinf(birth) || std::isnan(birth) || std::isnan(death))
      throw DataError(path + ":" + std::to_string(lineno) + ": birth must be finite");
    if (death <= birth)
      throw DataError(path + ":" + std::to_string(lineno) + ": death must exceed birth");

    if (static_cast<std::size_t>(deg) >= d.degrees.size()) d.degrees.resize(deg + 1);
    d.degrees[deg].push_back({birth, death});
    d.maxdim = std::max(d.maxdim, static_cast<int>(deg));
  }
  if (d.degrees.empty()) d.degrees.resize(1);
  return d;
}

void save_diagram_svg(const PersistenceDiagram& d, const std::string& path,
                      const std::string& subtitle) {
  double max_finite = 0.0;
  bool any_finite = false, any_infinite = false;
  for (const auto& bars : d.degrees)
    for (const PersistenceBar& b : bars) {
      max_finite = std::max(max_finite, b.birth);
      if (bar_is_infinite(b))
        any_infinite = true;
      else {
        max_finite = std::max(max_finite, b.death);
        any_finite = true;
      }
    }
  if (!any_finite && !any_infinite) max_finite = 1.0;
  if (max_finite <= 0.0) max_finite = 1.0;
  const double hi = 1.05 * max_finite;

  const double size = 560.0, margin = 70.0;
  const double span = size - 2.0 * margin;
  auto px = [&](double v) { return margin + span * v / hi; };
  auto py = [&](double v) { return size - margin - span * v / hi; };

  static const char* colors[] = {"#1b6ca8", "#c23b22", "#2e8b57", "#8a2be2", "#b8860b"};
  auto color = [&](std::size_t deg) { return colors[deg % 5]; };

  char buf[256];
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"560\" height=\"560\" "
         "viewBox=\"0 0 560 560\">\n";
  out << "<rect width=\"560\" height=\"560\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%.2f\" y=\"%.2f\" width=\"%.2f\" height=\"%.2f\" fill=\"none\" "
                "stroke=\"#444\"/>\n",
                margin, margin, span, span);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\" "
                "stroke-dasharray=\"4 3\"/>\n",
                px(0.0), py(0.0), px(hi), py(hi));
  out << buf;
  out << "<text x=\"280\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"16\">persistence diagram</text>\n";
  out << "<text x=\"280\" y=\"50\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\" fill=\"#555\">"
      << subtitle << "</text>\n";
  out << "<text x=\"280\" y=\"530\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">birth</text>\n";
  out << "<text x=\"25\" y=\"280\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 25 280)\">death</text>\n";
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                "font-size=\"11\" fill=\"#555\">%.4g</text>\n",
                margin - 6.0, py(0.0) + 4.0, 0.0);
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "<text x=\"%.2f\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                "font-size=\"11\" fill=\"#555\">%.4g</text>\n",
                margin - 6.0, py(hi) + 4.0, hi);
  out << buf;

  if (any_infinite) {
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#bbb\" "
                  "stroke-dasharray=\"2 3\"/>\n",
                  px(0.0), py(hi), px(hi), py(hi));
    out << buf;
  }

  for (std::size_t deg = 0; deg < d.degrees.size(); ++deg) {
    for (const PersistenceBar& b : d.degrees[deg]) {
      const double x = px(b.birth);
      const char* c = color(deg);
      if (bar_is_infinite(b)) {
        const double y = py(hi);
        std::snprintf(buf, sizeof(buf),
                      "<path d=\"M %.2f %.2f L %.2f %.2f M %.2f %.2f L %.2f %.2f\" "
                      "stroke=\"%s\" stroke-width=\"1.6\"/>\n",
                      x - 4.0, y - 4.0, x + 4.0, y + 4.0, x - 4.0, y + 4.0, x + 4.0, y - 4.0, c);
        out << buf;
        continue;
      }
      const double y = py(b.death);
      switch (deg % 3) {
        case 0:
          std::snprintf(buf, sizeof(buf),
                        "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"%s\" "
                        "fill-opacity=\"0.8\"/>\n",
                        x, y, c);
          break;
        case 1:
          std::snprintf(buf, sizeof(buf),
                        "<rect x=\"%.2f\" y=\"%.2f\" width=\"6\" height=\"6\" fill=\"%s\" "
                        "fill-opacity=\"0.8\"/>\n",
                        x - 3.0, y - 3.0, c);
          break;
        default:
          std::snprintf(buf, sizeof(buf),
                        "<path d=\"M %.2f %.2f l 4 4 l -4 4 l -4 -4 z\" fill=\"%s\" "
                        "fill-opacity=\"0.8\"/>\n",
                        x, y - 4.0, c);
          break;
      }
      out << buf;
    }
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gpdc
