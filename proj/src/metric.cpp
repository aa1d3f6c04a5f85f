#include "gpdc/metric.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <numbers>

#include "gpdc/grassmann.hpp"
#include "gpdc/parallel.hpp"

namespace gpdc {

ScaleParams choose_scale(const PointCloud& subset) {
  if (subset.n < 2) throw InsufficientPoints("choose_scale: need at least two points");
  if (subset.dim_intrinsic == 0)
    throw ParameterError("choose_scale: cloud has no declared intrinsic dimension");

  std::vector<double> row_max(subset.n, 0.0);
  parallel_for(subset.n, [&](std::size_t i) {
    double m = 0.0;
    for (std::size_t j = i + 1; j < subset.n; ++j)
      m = std::max(m, subset.squared_distance(i, j));
    row_max[i] = m;
  });
  double diam2 = 0.0;
  for (double v : row_max) diam2 = std::max(diam2, v);
  if (diam2 == 0.0) throw DegenerateCloud("choose_scale: all points coincide");

  double diam = std::sqrt(diam2);
  double codim = static_cast<double>(subset.dim_ambient - subset.dim_intrinsic);
  double gr_diam = std::max(
      std::numbers::pi,
      std::numbers::pi / 2.0 * std::sqrt(std::min(static_cast<double>(subset.dim_intrinsic), codim)));
  return ScaleParams{diam * diam / (gr_diam * gr_diam), diam, true};
}

double dc_distance(const double* p, const double* q, std::size_t dim_ambient, const Mat& fp,
                   const Mat& fq, double c, bool* degenerate) {
  if (c < 0.0) throw ParameterError("dc_distance: c must be nonnegative");
  double e2 = 0.0;
  for (std::size_t k = 0; k < dim_ambient; ++k) {
    double d = p[k] - q[k];
    e2 += d * d;
  }
  OrientedDistance g = oriented_grassmann_distance(fp, fq);
  if (degenerate) *degenerate = g.degenerate;
  return std::sqrt(e2 + c * g.value * g.value);
}

DistanceMatrix dc_matrix(const PointCloud& cloud, const FrameField& field, double c) {
  if (field.frames.size() != cloud.n) throw DimensionError("dc_matrix: field size mismatch");
  if (!field.oriented) throw PreconditionError("dc_matrix: frame field is not oriented");
  if (c < 0.0) throw ParameterError("dc_matrix: c must be nonnegative");

  DistanceMatrix m(cloud.n, MetricTag::grassmann_dc, c);
  std::atomic<std::size_t> degenerate{0};
  parallel_for(cloud.n, [&](std::size_t i) {
    std::size_t local = 0;
    for (std::size_t j = 0; j < i; ++j) {
      bool flag = false;
      m.tri[i * (i - 1) / 2 + j] = dc_distance(cloud.point(i), cloud.point(j),
                                               cloud.dim_ambient, field.frames[i],
                                               field.frames[j], c, &flag);
      if (flag) ++local;
    }
    degenerate += local;
  });
  m.degenerate_pairs = degenerate.load();
  return m;
}

DistanceMatrix euclidean_matrix(const PointCloud& cloud) {
  DistanceMatrix m(cloud.n, MetricTag::euclidean, 0.0);
  parallel_for(cloud.n, [&](std::size_t i) {
    for (std::size_t j = 0; j < i; ++j)
      m.tri[i * (i - 1) / 2 + j] = std::sqrt(cloud.squared_distance(i, j));
  });
  return m;
}

DistanceMatrix matrix_from_dense(const double* dense, std::size_t n, MetricTag tag, double c) {
  DistanceMatrix m(n, tag, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (dense[i * n + i] != 0.0) throw MatrixError("distance matrix: nonzero diagonal");
    for (std::size_t j = 0; j < i; ++j) {
      double a = dense[i * n + j], b = dense[j * n + i];
      if (!std::isfinite(a) || a < 0.0) throw MatrixError("distance matrix: bad entry");
      if (std::abs(a - b) > 1e-12) throw MatrixError("distance matrix: asymmetric");
      m.tri[i * (i - 1) / 2 + j] = a;
    }
  }
  return m;
}

double enclosing_radius(const DistanceMatrix& m) {
  if (m.n < 2) return 0.0;
  double enc = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < m.n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < m.n; ++j)
      if (j != i) row = std::max(row, m.at(i, j));
    enc = std::min(enc, row);
  }
  return enc;
}

namespace {

void put_u32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& s, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  for (int i = 0; i < 8; ++i) s.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 | static_cast<std::uint32_t>(p[3]) << 24;
}

double get_f64(const unsigned char* p) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) bits = bits << 8 | p[i];
  double v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

void save_gpdm(const DistanceMatrix& m, const std::string& path) {
  std::string buf;
  buf.reserve(21 + 8 * m.tri.size());
  buf += "GPDM";
  put_u32(buf, 1);
  put_u32(buf, static_cast<std::uint32_t>(m.n));
  buf.push_back(static_cast<char>(m.metric));
  put_f64(buf, m.c);
  for (double v : m.tri) put_f64(buf, v);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw IoError("write failed: " + path);
}

DistanceMatrix load_gpdm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto* p = reinterpret_cast<const unsigned char*>(buf.data());

  if (buf.size() < 21) throw ParseError("GPDM: truncated header in " + path);
  if (std::memcmp(p, "GPDM", 4) != 0) throw ParseError("GPDM: bad magic in " + path);
  std::uint32_t version = get_u32(p + 4);
  if (version != 1) throw ParseError("GPDM: unsupported version in " + path);
  std::uint32_t n = get_u32(p + 8);
  std::uint8_t tag = p[12];
  if (tag > 1) throw ParseError("GPDM: unknown metric tag in " + path);
  double c = get_f64(p + 13);

  std::size_t entries = n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
  if (buf.size() != 21 + 8 * entries) throw ParseError("GPDM: size mismatch in " + path);

  DistanceMatrix m(n, static_cast<MetricTag>(tag), c);
  for (std::size_t i = 0; i < entries; ++i) {
    double v = get_f64(p + 21 + 8 * i);
    if (!std::isfinite(v) || v < 0.0) throw ParseError("GPDM: bad entry in " + path);
    m.tri[i] = v;
  }
  return m;
}

void save_matrix_csv(const DistanceMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  char num[40];
  for (std::size_t i = 0; i < m.n; ++i) {
    std::string line;
    for (std::size_t j = 0; j < m.n; ++j) {
      std::snprintf(num, sizeof(num), "%.17g", m.at(i, j));
      if (j) line += ',';
      line += num;
    }
    line += '\n';
    out << line;
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace gpdc
