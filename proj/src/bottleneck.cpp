#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "gpdc/persistence.hpp"

namespace gpdc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double linf(const PersistenceBar& a, const PersistenceBar& b) {
  return std::max(std::abs(a.birth - b.birth), std::abs(a.death - b.death));
}

double half_persistence(const PersistenceBar& p) { return (p.death - p.birth) / 2.0; }

struct HopcroftKarp {
  int left, right;
  std::vector<std::vector<int>> adj;
  std::vector<int> match_l, match_r, dist;

  HopcroftKarp(int l, int r) : left(l), right(r), adj(l) {}

  bool bfs() {
    std::queue<int> q;
    dist.assign(left, -1);
    for (int u = 0; u < left; ++u)
      if (match_l[u] == -1) {
        dist[u] = 0;
        q.push(u);
      }
    bool found = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w == -1)
          found = true;
        else if (dist[w] == -1) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w == -1 || (dist[w] == dist[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = -1;
    return false;
  }

  int run() {
    match_l.assign(left, -1);
    match_r.assign(right, -1);
    int matched = 0;
    while (bfs())
      for (int u = 0; u < left; ++u)
        if (match_l[u] == -1 && dfs(u)) ++matched;
    return matched;
  }
};

// Diagonal-copies reduction: left nodes are the m bars of `a` followed by n
// copies of the diagonal (one per bar of `b`), right nodes the n bars of `b`
// followed by m copies (one per bar of `a`). A perfect matching at cost eps
// exists exactly when the bottleneck distance is at most eps.
bool feasible(const std::vector<PersistenceBar>& a, const std::vector<PersistenceBar>& b,
              double eps) {
  const int m = static_cast<int>(a.size()), n = static_cast<int>(b.size());
  HopcroftKarp hk(m + n, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j)
      if (linf(a[i], b[j]) <= eps) hk.adj[i].push_back(j);
    if (half_persistence(a[i]) <= eps) hk.adj[i].push_back(n + i);
  }
  for (int j = 0; j < n; ++j) {
    if (half_persistence(b[j]) <= eps) hk.adj[m + j].push_back(j);
    for (int i = 0; i < m; ++i) hk.adj[m + j].push_back(n + i);
  }
  return hk.run() == m + n;
}

double finite_bottleneck(const std::vector<PersistenceBar>& a,
                         const std::vector<PersistenceBar>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<double> cand{0.0};
  cand.reserve(a.size() * b.size() + a.size() + b.size() + 1);
  for (const auto& p : a) cand.push_back(half_persistence(p));
  for (const auto& q : b) cand.push_back(half_persistence(q));
  for (const auto& p : a)
    for (const auto& q : b) cand.push_back(linf(p, q));
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  std::size_t lo = 0, hi = cand.size() - 1;  // cand.back() is always feasible
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(a, b, cand[mid]))
      hi = mid;
    else
      lo = mid + 1;
  }
  return cand[lo];
}

}  // namespace

double bottleneck_distance(const std::vector<PersistenceBar>& a,
                           const std::vector<PersistenceBar>& b) {
  std::vector<PersistenceBar> fin_a, fin_b;
  std::vector<double> inf_a, inf_b;
  for (const auto& p : a) {
    if (bar_is_infinite(p))
      inf_a.push_back(p.birth);
    else
      fin_a.push_back(p);
  }
  for (const auto& q : b) {
    if (bar_is_infinite(q))
      inf_b.push_back(q.birth);
    else
      fin_b.push_back(q);
  }

  if (inf_a.size() != inf_b.size()) return kInf;
  double essential = 0.0;
  std::sort(inf_a.begin(), inf_a.end());
  std::sort(inf_b.begin(), inf_b.end());
  for (std::size_t i = 0; i < inf_a.size(); ++i)
    essential = std::max(essential, std::abs(inf_a[i] - inf_b[i]));

  return std::max(essential, finite_bottleneck(fin_a, fin_b));
}

}  // namespace gpdc
