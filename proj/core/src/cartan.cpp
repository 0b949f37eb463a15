#include "weylfaces/cartan.hpp"

#include <queue>

#include "weylfaces/errors.hpp"
#include "weylfaces/linalg.hpp"

namespace weylfaces {

CartanData validate_gcm(const std::vector<std::vector<int>>& matrix,
                        std::vector<std::string> labels) {
  const int n = static_cast<int>(matrix.size());
  if (n > 30) throw RankTooLarge("node subsets are bitmask-backed; at most 30 nodes supported");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix[i].size()) != n)
      throw GcmViolation(i, 0, "matrix is not square");
    if (matrix[i][i] != 2) throw GcmViolation(i, i, "a_ii != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) throw GcmViolation(i, j, "a_ij > 0 off the diagonal");
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
        throw GcmViolation(i, j, "a_ij=0 but a_ji!=0");
    }
  }
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  } else if (static_cast<int>(labels.size()) != n) {
    throw GcmViolation(0, 0, "label count does not match matrix size");
  }

  RatMatrix q(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q[i][j] = matrix[i][j];

  CartanData c;
  c.a_ = matrix;
  c.labels_ = std::move(labels);
  c.rank_ = rank_of(std::move(q));
  return c;
}

std::vector<NodeSet> components(const CartanData& c, NodeSet j) {
  std::vector<NodeSet> out;
  NodeSet seen;
  for (int start : j) {
    if (seen.contains(start)) continue;
    NodeSet comp = NodeSet::single(start);
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : j) {
        if (!comp.contains(v) && c.adjacent(u, v)) {
          comp = comp.with(v);
          frontier.push(v);
        }
      }
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

RatVec symmetrizer(const CartanData& c, NodeSet j) {
  RatVec d = zero_vec(c.size());
  for (NodeSet comp : components(c, j)) {
    // d_u a_uv = d_v a_vu: propagate d_v = d_u a_uv / a_vu along a spanning
    // tree, then verify every edge of the component.
    const int root = *comp.begin();
    d[root] = 1;
    std::queue<int> frontier;
    frontier.push(root);
    NodeSet placed = NodeSet::single(root);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int v : comp) {
        if (placed.contains(v) || !c.adjacent(u, v)) continue;
        d[v] = d[u] * c.a(u, v) / c.a(v, u);
        placed = placed.with(v);
        frontier.push(v);
      }
    }
    for (int u : comp)
      for (int v : comp)
        if (d[u] * c.a(u, v) != d[v] * c.a(v, u))
          throw NotSymmetrizable("no symmetrizer on component " + to_string(comp));
  }
  return d;
}

bool is_finite_type(const CartanData& c, NodeSet j) {
  if (j.empty()) return true;
  const RatVec d = symmetrizer(c, j);
  const std::vector<int> nodes = j.indices();
  const std::size_t k = nodes.size();
  RatMatrix sym(k, RatVec(k));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) sym[p][q] = d[nodes[p]] * c.a(nodes[p], nodes[q]);
  return leading_minors_positive(sym);
}

}  // namespace weylfaces
