#include "gpdc/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <queue>
#include <unordered_map>

#include "gpdc/errors.hpp"

namespace gpdc {

namespace {

using index_t = std::int64_t;
constexpr double kInf = std::numeric_limits<double>::infinity();

// C(n, k) table with overflow detection; indices of high-dimensional
// simplices on large point sets can approach the int64 range.
class BinomialTable {
public:
  BinomialTable(index_t n, index_t k) : k_(k), b_((n + 1) * (k + 1), 0) {
    for (index_t i = 0; i <= n; ++i) {
      at(i, 0) = 1;
      for (index_t j = 1; j <= std::min(i, k); ++j) {
        if (j == i) {
          at(i, j) = 1;
          continue;
        }
        index_t x = at(i - 1, j - 1), y = at(i - 1, j);
        if (x > std::numeric_limits<index_t>::max() - y)
          throw SizeError("vr_persistence: simplex index space overflows");
        at(i, j) = x + y;
      }
    }
  }
  index_t operator()(index_t n, index_t k) const { return b_[n * (k_ + 1) + k]; }

private:
  index_t& at(index_t n, index_t k) { return b_[n * (k_ + 1) + k]; }
  index_t k_;
  std::vector<index_t> b_;
};

inline double dget(const DistanceMatrix& m, index_t i, index_t j) {
  return i > j ? m.tri[static_cast<std::size_t>(i) * (i - 1) / 2 + j]
               : m.tri[static_cast<std::size_t>(j) * (j - 1) / 2 + i];
}

struct DiamIdx {
  double diam;
  index_t idx;
};

// Order in which columns are reduced: larger diameter first, then smaller
// combinatorial index. As a heap comparator this makes the top element the
// smallest-diameter, largest-index entry, which is exactly the coboundary
// pivot.
struct ColumnOrder {
  bool operator()(const DiamIdx& a, const DiamIdx& b) const {
    return a.diam > b.diam || (a.diam == b.diam && a.idx < b.idx);
  }
};

using Heap = std::priority_queue<DiamIdx, std::vector<DiamIdx>, ColumnOrder>;

DiamIdx pop_pivot(Heap& h) {
  if (h.empty()) return {0.0, -1};
  DiamIdx p = h.top();
  h.pop();
  while (!h.empty() && h.top().idx == p.idx) {
    h.pop();  // mod-2 cancellation
    if (h.empty()) return {0.0, -1};
    p = h.top();
    h.pop();
  }
  return p;
}

DiamIdx get_pivot(Heap& h) {
  DiamIdx p = pop_pivot(h);
  if (p.idx != -1) h.push(p);
  return p;
}

struct UnionFind {
  std::vector<index_t> parent, rank_;
  explicit UnionFind(index_t n) : parent(n), rank_(n, 0) {
    for (index_t i = 0; i < n; ++i) parent[i] = i;
  }
  index_t find(index_t x) {
    index_t root = x;
    while (parent[root] != root) root = parent[root];
    while (parent[x] != root) {
      index_t next = parent[x];
      parent[x] = root;
      x = next;
    }
    return root;
  }
  void link(index_t x, index_t y) {
    if (rank_[x] > rank_[y]) std::swap(x, y);
    parent[x] = y;
    if (rank_[x] == rank_[y]) ++rank_[y];
  }
};

// Open-addressing map from simplex index to column position; kept lean
// because the big runs hold ~1e8 entries.
class PivotMap {
public:
  explicit PivotMap(std::size_t expected) {
    std::size_t cap = 64;
    while (cap * 7 < (expected + 1) * 10) cap <<= 1;
    keys_.assign(cap, -1);
    vals_.resize(cap);
    mask_ = cap - 1;
  }
  const std::int32_t* find(index_t key) const {
    for (std::size_t slot = hash(key);; slot = (slot + 1) & mask_) {
      if (keys_[slot] == key) return &vals_[slot];
      if (keys_[slot] == -1) return nullptr;
    }
  }
  void insert(index_t key, std::int32_t val) {
    for (std::size_t slot = hash(key);; slot = (slot + 1) & mask_) {
      if (keys_[slot] == -1) {
        keys_[slot] = key;
        vals_[slot] = val;
        return;
      }
      if (keys_[slot] == key) {
        vals_[slot] = val;
        return;
      }
    }
  }

private:
  std::size_t hash(index_t key) const {
    std::uint64_t x = static_cast<std::uint64_t>(key);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<std::size_t>(x) & mask_;
  }
  std::vector<index_t> keys_;
  std::vector<std::int32_t> vals_;
  std::size_t mask_;
};

// Visit every (dim+1)-subset whose partial diameter stays within the
// threshold, passing (combinatorial index, diameter). Vertices are chosen
// descending, so the pruning by diameter never misses a subset.
template <typename F>
void foreach_simplex(index_t n, int dim, double threshold, const DistanceMatrix& m,
                     const BinomialTable& binom, const F& f) {
  std::vector<index_t> verts(dim + 1);
  auto rec = [&](auto&& self, int slot, index_t upper, index_t part, double diam) -> void {
    for (index_t v = upper - 1; v >= slot; --v) {
      double nd = diam;
      for (int t = dim; t > slot; --t) nd = std::max(nd, dget(m, verts[t], v));
      if (nd > threshold) continue;
      verts[slot] = v;
      index_t np = part + binom(v, slot + 1);
      if (slot == 0)
        f(np, nd);
      else
        self(self, slot - 1, v, np, nd);
    }
  };
  if (n >= dim + 1) rec(rec, dim, n, 0, 0.0);
}

// Decode a simplex index into vertices, descending.
void simplex_vertices(index_t idx, int dim, index_t n, const BinomialTable& binom,
                      std::vector<index_t>& out) {
  out.resize(dim + 1);
  index_t v = n - 1;
  for (int k = dim + 1; k > 0; --k) {
    if (binom(v, k) > idx) {
      index_t count = v, i;
      while (count > 0) {
        i = v;
        index_t step = count >> 1;
        i -= step;
        if (binom(i, k) > idx) {
          v = i - 1;
          count -= step + 1;
        } else
          count = step;
      }
    }
    out[dim + 1 - k] = v;
    idx -= binom(v, k);
  }
}

// Cofacets of a simplex in decreasing index order, diameters maintained
// incrementally (after Bauer's Ripser).
class CoboundaryEnumerator {
public:
  CoboundaryEnumerator(DiamIdx simplex, int dim, index_t n, const DistanceMatrix& m,
                       const BinomialTable& binom)
      : idx_below_(simplex.idx),
        idx_above_(0),
        v_(n - 1),
        k_(dim + 1),
        diam_(simplex.diam),
        m_(m),
        binom_(binom) {
    simplex_vertices(simplex.idx, dim, n, binom, verts_);
  }

  bool has_next() {
    while (v_ != -1 && binom_(v_, k_) <= idx_below_) {
      idx_below_ -= binom_(v_, k_);
      idx_above_ += binom_(v_, k_ + 1);
      --v_;
      --k_;
    }
    return v_ != -1;
  }

  DiamIdx next() {
    double d = diam_;
    for (index_t w : verts_) d = std::max(d, dget(m_, v_, w));
    index_t idx = idx_above_ + binom_(v_--, k_ + 1) + idx_below_;
    return {d, idx};
  }

private:
  index_t idx_below_, idx_above_, v_, k_;
  double diam_;
  std::vector<index_t> verts_;
  const DistanceMatrix& m_;
  const BinomialTable& binom_;
};

struct Engine {
  const DistanceMatrix& m;
  index_t n;
  double threshold;
  const BinomialTable binom;
  int dim_max;

  Engine(const DistanceMatrix& mat, int maxdim, double thr)
      : m(mat),
        n(static_cast<index_t>(mat.n)),
        threshold(thr),
        binom(static_cast<index_t>(mat.n), std::min<index_t>(maxdim, mat.n - 2) + 2),
        dim_max(static_cast<int>(std::min<index_t>(maxdim, mat.n - 2))) {}

  void dim0(std::vector<DiamIdx>& columns, std::vector<PersistenceBar>& bars) {
    std::vector<DiamIdx> edges;
    foreach_simplex(n, 1, threshold, m, binom,
                    [&](index_t idx, double diam) { edges.push_back({diam, idx}); });
    std::sort(edges.begin(), edges.end(), [](const DiamIdx& a, const DiamIdx& b) {
      return a.diam < b.diam || (a.diam == b.diam && a.idx > b.idx);
    });

    UnionFind uf(n);
    std::vector<index_t> verts;
    for (const DiamIdx& e : edges) {
      simplex_vertices(e.idx, 1, n, binom, verts);
      index_t u = uf.find(verts[0]), v = uf.find(verts[1]);
      if (u != v) {
        uf.link(u, v);
        if (e.diam > 0.0) bars.push_back({0.0, e.diam});
      } else {
        columns.push_back(e);
      }
    }
    for (index_t i = 0; i < n; ++i)
      if (uf.find(i) == i) bars.push_back({0.0, kInf});
    std::reverse(columns.begin(), columns.end());
  }

  void compute_pairs(int dim, const std::vector<DiamIdx>& columns, PivotMap& pivots,
                     std::vector<PersistenceBar>& bars) {
    std::unordered_map<std::int32_t, std::vector<DiamIdx>> chains;
    const auto ncols = static_cast<std::int32_t>(columns.size());
    std::vector<DiamIdx> cofacets;

    for (std::int32_t i = 0; i < ncols; ++i) {
      const DiamIdx column = columns[i];
      Heap working_red, working_cob;
      std::int32_t add = i;
      bool initial = true;
      bool done = false;

      while (!done) {
        bool shortcut_ok = initial;  // emergent pairs exist only pre-addition
        initial = false;
        DiamIdx pivot{0.0, -1};
        bool have_pivot = false;

        DiamIdx self = columns[add];
        const DiamIdx* chain = &self;
        std::size_t chain_len = 1;
        auto it = chains.find(add);
        if (it != chains.end()) {
          chain = it->second.data();
          chain_len = it->second.size();
        }

        for (std::size_t ci = 0; ci < chain_len; ++ci) {
          const DiamIdx& simplex = chain[ci];
          working_red.push(simplex);
          cofacets.clear();
          CoboundaryEnumerator cob(simplex, dim, n, m, binom);
          while (cob.has_next()) {
            DiamIdx cf = cob.next();
            if (cf.diam > threshold) continue;
            cofacets.push_back(cf);
            if (shortcut_ok && cf.diam == column.diam) {
              if (!pivots.find(cf.idx)) {
                pivot = cf;
                have_pivot = true;
                break;
              }
              shortcut_ok = false;
            }
          }
          if (have_pivot) break;
          for (const DiamIdx& cf : cofacets) working_cob.push(cf);
        }
        if (!have_pivot) pivot = get_pivot(working_cob);

        if (pivot.idx == -1) {
          bars.push_back({column.diam, kInf});
          break;
        }
        if (const std::int32_t* owner = pivots.find(pivot.idx)) {
          add = *owner;
          continue;  // add that column's chain and keep reducing
        }
        pivots.insert(pivot.idx, i);
        if (pivot.diam > column.diam) bars.push_back({column.diam, pivot.diam});
        std::vector<DiamIdx> reduced;
        for (;;) {
          DiamIdx e = pop_pivot(working_red);
          if (e.idx == -1) break;
          reduced.push_back(e);
        }
        if (reduced.size() > 1) chains.emplace(i, std::move(reduced));
        done = true;
      }
    }
  }

  void assemble(int dim, std::vector<DiamIdx>& columns, const PivotMap& pivots) {
    columns.clear();
    foreach_simplex(n, dim, threshold, m, binom, [&](index_t idx, double diam) {
      if (!pivots.find(idx)) columns.push_back({diam, idx});
    });
    std::sort(columns.begin(), columns.end(), ColumnOrder{});
  }
};

void canonicalize(PersistenceDiagram& d) {
  for (auto& bars : d.degrees)
    std::sort(bars.begin(), bars.end(), [](const PersistenceBar& a, const PersistenceBar& b) {
      return a.birth < b.birth || (a.birth == b.birth && a.death < b.death);
    });
}

}  // namespace

PersistenceDiagram vr_persistence(const DistanceMatrix& m, int maxdim,
                                  std::optional<double> threshold_opt) {
  if (maxdim < 0) throw ParameterError("vr_persistence: maxdim must be nonnegative");
  if (m.n == 0) throw InsufficientPoints("vr_persistence: empty matrix");

  double threshold = threshold_opt ? *threshold_opt : enclosing_radius(m);
  if (!(threshold >= 0.0)) throw ParameterError("vr_persistence: threshold must be nonnegative");

  PersistenceDiagram out;
  out.maxdim = maxdim;
  out.threshold = threshold;
  out.degrees.assign(maxdim + 1, {});
  if (m.n == 1) {
    out.degrees[0].push_back({0.0, kInf});
    return out;
  }

  Engine eng(m, maxdim, threshold);
  std::vector<DiamIdx> columns;
  eng.dim0(columns, out.degrees[0]);

  for (int dim = 1; dim <= eng.dim_max; ++dim) {
    if (columns.size() > static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max()))
      throw SizeError("vr_persistence: too many columns in one dimension");
    PivotMap pivots(columns.size());
    eng.compute_pairs(dim, columns, pivots, out.degrees[dim]);
    if (dim < eng.dim_max) eng.assemble(dim + 1, columns, pivots);
  }

  canonicalize(out);
  return out;
}

PersistenceDiagram brute_force_persistence(const DistanceMatrix& m, int maxdim,
                                           std::optional<double> threshold_opt) {
  if (maxdim < 0) throw ParameterError("brute_force_persistence: maxdim must be nonnegative");
  if (m.n == 0) throw InsufficientPoints("brute_force_persistence: empty matrix");
  if (m.n > 40) throw SizeError("brute_force_persistence: refuses n > 40");

  double threshold = threshold_opt ? *threshold_opt : enclosing_radius(m);
  if (!(threshold >= 0.0))
    throw ParameterError("brute_force_persistence: threshold must be nonnegative");

  const int n = static_cast<int>(m.n);
  struct Simplex {
    double diam;
    int dim;
    std::vector<int> verts;  // ascending
  };
  std::vector<Simplex> simplices;
  int top_dim = std::min(maxdim + 1, n - 1);

  std::vector<int> choice;
  auto build = [&](auto&& self, int next, int remaining, double diam) -> void {
    if (remaining == 0) {
      simplices.push_back({diam, static_cast<int>(choice.size()) - 1, choice});
      return;
    }
    for (int v = next; v <= n - remaining; ++v) {
      double nd = diam;
      for (int w : choice) nd = std::max(nd, m.at(w, v));
      if (nd > threshold) continue;
      choice.push_back(v);
      self(self, v + 1, remaining - 1, nd);
      choice.pop_back();
    }
  };
  for (int dim = 0; dim <= top_dim; ++dim) build(build, 0, dim + 1, 0.0);

  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.diam != b.diam) return a.diam < b.diam;
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.verts < b.verts;
  });

  std::map<std::vector<int>, int> position;
  for (std::size_t i = 0; i < simplices.size(); ++i) position[simplices[i].verts] = static_cast<int>(i);

  const int total = static_cast<int>(simplices.size());
  std::vector<std::vector<int>> cols(total);
  for (int j = 0; j < total; ++j) {
    const Simplex& s = simplices[j];
    if (s.dim == 0) continue;
    std::vector<int> rows;
    std::vector<int> face;
    for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
      face.clear();
      for (std::size_t t = 0; t < s.verts.size(); ++t)
        if (t != drop) face.push_back(s.verts[t]);
      rows.push_back(position.at(face));
    }
    std::sort(rows.begin(), rows.end());
    cols[j] = std::move(rows);
  }

  std::vector<int> owner_of_low(total, -1);
  std::vector<int> paired_with(total, -1);
  for (int j = 0; j < total; ++j) {
    std::vector<int>& col = cols[j];
    while (!col.empty()) {
      int low = col.back();
      int owner = owner_of_low[low];
      if (owner == -1) {
        owner_of_low[low] = j;
        paired_with[low] = j;
        paired_with[j] = low;
        break;
      }
      // symmetric difference with the owning column
      std::vector<int> merged;
      std::set_symmetric_difference(col.begin(), col.end(), cols[owner].begin(),
                                    cols[owner].end(), std::back_inserter(merged));
      col = std::move(merged);
    }
  }

  PersistenceDiagram out;
  out.maxdim = maxdim;
  out.threshold = threshold;
  out.degrees.assign(maxdim + 1, {});
  for (int i = 0; i < total; ++i) {
    const Simplex& s = simplices[i];
    int j = paired_with[i];
    if (j != -1 && j > i) {
      if (s.dim <= maxdim && simplices[j].diam > s.diam)
        out.degrees[s.dim].push_back({s.diam, simplices[j].diam});
    } else if (j == -1 && s.dim <= maxdim) {
      out.degrees[s.dim].push_back({s.diam, kInf});
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace gpdc
