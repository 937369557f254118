#include "projlens/roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace projlens {

namespace {

// Cartan pairing <beta, alpha_i> for the simply laced case:
// 2*beta_i - sum of beta_j over neighbours j of i.
int pairing(const std::vector<int>& beta, int i, const std::vector<std::vector<int>>& nbr) {
  int s = 2 * beta[i];
  for (int j : nbr[i]) s -= beta[j];
  return s;
}

std::vector<int> reflect(const std::vector<int>& beta, int i,
                         const std::vector<std::vector<int>>& nbr) {
  std::vector<int> out = beta;
  out[i] -= pairing(beta, i, nbr);
  return out;
}

// Neighbour lists in node-position space (positions into the ascending
// node list), so root coefficient vectors can ignore the labelling.
std::vector<std::vector<int>> position_adjacency(const Diagram& d) {
  const auto nodes = d.nodes().to_vector();
  std::vector<int> pos(TypeSet::kMaxNode + 1, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> nbr(nodes.size());
  for (auto [a, b] : d.edges()) {
    nbr[pos[a]].push_back(pos[b]);
    nbr[pos[b]].push_back(pos[a]);
  }
  return nbr;
}

bool all_nonneg(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

}  // namespace

bool Root::positive() const { return all_nonneg(coeffs); }

std::vector<Root> positive_roots(const Diagram& d) {
  if (!d.connected()) throw std::invalid_argument("positive_roots: diagram must be connected");
  classify_shape(d);  // rejects non-ADE shapes
  const auto nbr = position_adjacency(d);
  const int n = static_cast<int>(nbr.size());

  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> simple(n, 0);
    simple[i] = 1;
    all.insert(simple);
    frontier.push_back(simple);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier)
      for (int i = 0; i < n; ++i) {
        auto img = reflect(beta, i, nbr);
        if (all.insert(img).second) next.push_back(img);
      }
    frontier = std::move(next);
  }

  std::vector<Root> pos;
  for (const auto& v : all)
    if (all_nonneg(v)) pos.push_back(Root{v});
  std::sort(pos.begin(), pos.end());
  return pos;
}

WeylElement longest_element(const Diagram& d) {
  if (!d.connected()) throw std::invalid_argument("longest_element: diagram must be connected");
  const auto nbr = position_adjacency(d);
  const int n = static_cast<int>(nbr.size());
  const auto nodes = d.nodes().to_vector();

  // Track w as the list of images of the simple roots (matrix columns).
  std::vector<std::vector<int>> col(n);
  for (int i = 0; i < n; ++i) {
    col[i].assign(n, 0);
    col[i][i] = 1;
  }
  std::vector<int> word;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < n; ++i)
      if (all_nonneg(col[i])) {
        pick = i;
        break;
      }
    if (pick == -1) break;
    // w <- w * s_pick: new column j = w(s_pick(alpha_j)).
    // s_pick(alpha_j) = alpha_j - <alpha_j, alpha_pick> alpha_pick.
    std::vector<std::vector<int>> ncol(n);
    for (int j = 0; j < n; ++j) {
      int c = (j == pick) ? 2 : 0;
      for (int k : nbr[pick])
        if (k == j) c -= 1;
      ncol[j] = col[j];
      for (int t = 0; t < n; ++t) ncol[j][t] -= c * col[pick][t];
    }
    col = std::move(ncol);
    word.push_back(nodes[pick]);
  }

  WeylElement w;
  w.word = std::move(word);
  w.matrix.assign(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) w.matrix[i][j] = col[j][i];
  return w;
}

DiagramMap opposition(const Diagram& d) {
  DiagramMap out;
  if (d.nodes().empty()) return out;
  for (TypeSet comp : components(d)) {
    Diagram c = induced(d, comp);
    const auto nodes = comp.to_vector();
    const int n = static_cast<int>(nodes.size());
    if (n == 1) {
      out.set(nodes[0], nodes[0]);
      continue;
    }
    WeylElement w0 = longest_element(c);
    for (int j = 0; j < n; ++j) {
      int target = -1;
      for (int i = 0; i < n; ++i) {
        if (w0.matrix[i][j] == -1) {
          if (target != -1) throw std::logic_error("opposition: w_0 image not a negative simple root");
          target = i;
        } else if (w0.matrix[i][j] != 0) {
          throw std::logic_error("opposition: w_0 image not a negative simple root");
        }
      }
      out.set(nodes[j], nodes[target]);
    }
  }
  return out;
}

TypeSet polar_type(const Diagram& d) {
  if (!d.connected()) throw std::invalid_argument("polar_type: diagram must be connected");
  const auto pos = positive_roots(d);
  const auto nbr = position_adjacency(d);
  const auto nodes = d.nodes().to_vector();
  // The highest root strictly dominates every other positive root; it
  // is the unique maximiser of the coefficient sum.
  const std::vector<int>* theta = nullptr;
  int best = -1;
  for (const auto& r : pos) {
    int h = 0;
    for (int c : r.coeffs) h += c;
    if (h > best) {
      best = h;
      theta = &r.coeffs;
    }
  }
  TypeSet out;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (pairing(*theta, static_cast<int>(i), nbr) != 0) out = out.with(nodes[i]);
  return out;
}

}  // namespace projlens
