#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gpdc/errors.hpp"
#include "gpdc/generators.hpp"

namespace gpdc {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

[[noreturn]] void fail(const std::string& path, std::size_t line, const std::string& what) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& tok, const std::string& path, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    fail(path, line, "bad number '" + tok + "'");
  }
  if (used != tok.size()) fail(path, line, "bad number '" + tok + "'");
  if (std::isnan(v) || std::isinf(v)) fail(path, line, "non-finite value");
  return v;
}

bool split_row(const std::string& line, bool csv, std::vector<std::string>& out) {
  out.clear();
  if (csv) {
    std::istringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    if (!line.empty() && line.back() == ',') out.push_back("");
  } else {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
  }
  return !out.empty();
}

PointCloud from_rows(const std::vector<std::vector<double>>& rows) {
  PointCloud cloud(rows.size(), rows.front().size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) cloud.point(i)[j] = rows[i][j];
  return cloud;
}

PointCloud load_table(const std::string& path, bool csv) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::vector<std::string> toks;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!split_row(line, csv, toks)) continue;
    std::vector<double> row;
    row.reserve(toks.size());
    for (const std::string& t : toks) row.push_back(parse_double(t, path, lineno));
    if (!rows.empty() && row.size() != rows.front().size())
      fail(path, lineno, "expected " + std::to_string(rows.front().size()) + " columns");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(path, lineno == 0 ? 1 : lineno, "no points");
  return from_rows(rows);
}

PointCloud load_off(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> toks;

  auto next_content = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content()) fail(path, 1, "empty file");
  split_row(line, false, toks);
  if (toks.empty() || toks[0] != "OFF") fail(path, lineno, "expected OFF header");

  std::size_t nv = 0;
  if (toks.size() >= 2) {
    nv = static_cast<std::size_t>(parse_double(toks[1], path, lineno));
  } else {
    if (!next_content()) fail(path, lineno, "missing vertex count");
    split_row(line, false, toks);
    if (toks.empty()) fail(path, lineno, "missing vertex count");
    nv = static_cast<std::size_t>(parse_double(toks[0], path, lineno));
  }
  if (nv == 0) fail(path, lineno, "no vertices");

  std::vector<std::vector<double>> rows;
  rows.reserve(nv);
  while (rows.size() < nv) {
    if (!next_content()) fail(path, lineno, "vertex block ends early");
    split_row(line, false, toks);
    if (toks.size() < 3) fail(path, lineno, "expected 3 vertex coordinates");
    rows.push_back({parse_double(toks[0], path, lineno), parse_double(toks[1], path, lineno),
                    parse_double(toks[2], path, lineno)});
  }
  return from_rows(rows);
}

}  // namespace

PointCloud load_points(const std::string& path, PointFormat format) {
  switch (format) {
    case PointFormat::csv:
      return load_table(path, true);
    case PointFormat::whitespace:
      return load_table(path, false);
    case PointFormat::off_vertices:
      return load_off(path);
  }
  throw ParameterError("load_points: unknown format");
}

void save_points_csv(const PointCloud& cloud, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  for (std::size_t i = 0; i < cloud.n; ++i) {
    const double* p = cloud.point(i);
    for (std::size_t j = 0; j < cloud.dim_ambient; ++j) {
      if (j) out << ',';
      out << fmt(p[j]);
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void save_frames(const FrameField& field, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << field.frames.size() << ' ' << field.dim_ambient << ' ' << field.dim_intrinsic << ' '
      << (field.oriented ? 1 : 0) << '\n';
  for (const Mat& f : field.frames) {
    for (std::size_t i = 0; i < field.dim_ambient; ++i) {
      for (std::size_t j = 0; j < field.dim_intrinsic; ++j) {
        if (j) out << ' ';
        out << fmt(f(i, j));
      }
      out << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

FrameField load_frames(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::size_t n = 0, dim_d = 0, dim_i = 0;
  int oriented = 0;
  if (!(in >> n >> dim_d >> dim_i >> oriented))
    throw ParseError(path + ":1: expected header 'n D d oriented'");
  if (dim_d == 0 || dim_i == 0 || dim_i > dim_d || (oriented != 0 && oriented != 1))
    throw ParseError(path + ":1: bad header values");

  FrameField field;
  field.dim_ambient = dim_d;
  field.dim_intrinsic = dim_i;
  field.oriented = oriented == 1;
  field.frames.reserve(n);
  for (std::size_t b = 0; b < n; ++b) {
    Mat f(dim_d, dim_i);
    for (std::size_t i = 0; i < dim_d; ++i)
      for (std::size_t j = 0; j < dim_i; ++j)
        if (!(in >> f(i, j)))
          throw ParseError(path + ": frame block " + std::to_string(b) + " ends early");
    field.frames.push_back(std::move(f));
  }
  return field;
}

}  // namespace gpdc
