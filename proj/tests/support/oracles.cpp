#include "support/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "projlens/gfq.hpp"

namespace projlens::oracles {

using gf::Fq;
using gf::Mat;
using gf::Subspace;

namespace {

// all vectors of F_q^n as byte arrays, index-ordered
std::vector<std::vector<std::uint8_t>> all_vectors(int n, int q) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> v(n, 0);
  for (;;) {
    out.push_back(v);
    int i = 0;
    for (; i < n; ++i) {
      if (++v[i] < q) break;
      v[i] = 0;
    }
    if (i == n) break;
  }
  return out;
}

unsigned long long gl_count_rec(const Fq& f, int n, int level, const Subspace& span,
                                const std::vector<std::vector<std::uint8_t>>& vecs) {
  unsigned long long total = 0;
  if (level == n - 1) {
    for (const auto& v : vecs)
      if (!span.contains_vector(f, v.data())) ++total;
    return total;
  }
  for (const auto& v : vecs) {
    if (span.contains_vector(f, v.data())) continue;
    Mat one = Mat::zero(1, n);
    for (int c = 0; c < n; ++c) one.at(0, c) = v[c];
    total += gl_count_rec(f, n, level + 1, span.sum(f, Subspace::from_rows(f, one)), vecs);
  }
  return total;
}

}  // namespace

unsigned long long gl_order_enumerated(int n, int q) {
  Fq f(q);
  return gl_count_rec(f, n, 0, Subspace::zero(n), all_vectors(n, q));
}

unsigned long long pgl_order_enumerated(int n, int q) {
  // scalar matrices, enumerated
  int scalars = 0;
  for (int k = 1; k < q; ++k) ++scalars;
  return gl_order_enumerated(n, q) / scalars;
}

int power_class_size(int q, int a) {
  std::set<int> powers;
  for (int k = 1; k < q; ++k) {
    int p = 1;
    for (int i = 0; i < a; ++i) p = p * k % q;
    powers.insert(p);
  }
  return static_cast<int>(powers.size());
}

unsigned long long psl_a_order_enumerated(int n, int q, int a) {
  // matrices with determinant an a-th power: |GL| * s_a/(q-1);
  // scalars inside: lambda with lambda^n an a-th power
  const unsigned long long gl = gl_order_enumerated(n, q);
  const int s_a = power_class_size(q, a);
  std::set<int> powers;
  for (int k = 1; k < q; ++k) {
    int p = 1;
    for (int i = 0; i < a; ++i) p = p * k % q;
    powers.insert(p);
  }
  int scalars_inside = 0;
  for (int l = 1; l < q; ++l) {
    int p = 1;
    for (int i = 0; i < n; ++i) p = p * l % q;
    if (powers.count(p)) ++scalars_inside;
  }
  return gl * s_a / (q - 1) / scalars_inside;
}

namespace {

struct OrthoCtx {
  int m = 0, n = 0, q = 0;
  std::vector<std::vector<std::uint8_t>> vecs;
  std::vector<int> qval;                 // Q per vector index
  std::vector<std::vector<std::uint8_t>> bform;  // B per pair of indices
  unsigned long long count = 0, circ = 0;
  std::vector<int> cols;  // chosen vector indices
};

int vq(const OrthoCtx& c, const std::vector<std::uint8_t>& v) {
  int s = 0;
  for (int i = 0; i < c.m; ++i) s += v[2 * i] * v[2 * i + 1];
  return s % c.q;
}

int vb(const OrthoCtx& c, const std::vector<std::uint8_t>& u,
       const std::vector<std::uint8_t>& v) {
  int s = 0;
  for (int i = 0; i < c.m; ++i) s += u[2 * i] * v[2 * i + 1] + u[2 * i + 1] * v[2 * i];
  return s % c.q;
}

// does the completed matrix preserve the reference generator class
// (even intersection defect with span(e_0, e_2, ...))?
bool preserves_class(const OrthoCtx& c) {
  Fq f(c.q);
  // odd-coordinate projection of the images of the even basis vectors
  Mat p = Mat::zero(c.m, c.m);
  for (int i = 0; i < c.m; ++i)
    for (int k = 0; k < c.m; ++k) p.at(i, k) = c.vecs[c.cols[2 * i]][2 * k + 1];
  const int r = gf::rref(f, p);
  return r % 2 == 0;
}

void ortho_rec(OrthoCtx& c, int level, const std::vector<int>& zcand) {
  // zcand: vector indices B-orthogonal to all completed pairs
  if (level == c.n) {
    ++c.count;
    if (preserves_class(c)) ++c.circ;
    return;
  }
  if (level % 2 == 0) {
    for (int vi : zcand) {
      if (c.qval[vi] != 0 || vi == 0) continue;
      c.cols[level] = vi;
      ortho_rec(c, level + 1, zcand);
    }
  } else {
    const int prev = c.cols[level - 1];
    // partner column: B(prev, v) = 1, Q(v) = 0; afterwards shrink the
    // candidate pool to the perp of the completed pair
    for (int vi : zcand) {
      if (c.qval[vi] != 0) continue;
      if (c.bform[prev][vi] != 1) continue;
      c.cols[level] = vi;
      std::vector<int> next;
      for (int w : zcand)
        if (c.bform[prev][w] == 0 && c.bform[vi][w] == 0) next.push_back(w);
      ortho_rec(c, level + 1, next);
    }
  }
}

}  // namespace

OrthogonalOrders orthogonal_orders_enumerated(int dim2, int q) {
  if (dim2 % 2 != 0 || dim2 > 8) throw std::invalid_argument("orthogonal oracle: 2m <= 8");
  OrthoCtx c;
  c.m = dim2 / 2;
  c.n = dim2;
  c.q = q;
  c.vecs = all_vectors(dim2, q);
  const int total = static_cast<int>(c.vecs.size());
  c.qval.resize(total);
  for (int i = 0; i < total; ++i) c.qval[i] = vq(c, c.vecs[i]);
  c.bform.assign(total, std::vector<std::uint8_t>(total, 0));
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      c.bform[i][j] = static_cast<std::uint8_t>(vb(c, c.vecs[i], c.vecs[j]));
  c.cols.assign(dim2, 0);
  std::vector<int> all(total);
  for (int i = 0; i < total; ++i) all[i] = i;
  ortho_rec(c, 0, all);

  OrthogonalOrders out;
  out.go = c.count;
  int scalars = 0;  // lambda I preserving the form: lambda^2 = 1
  for (int l = 1; l < q; ++l)
    if (l * l % q == 1) ++scalars;
  out.pgo = c.count / scalars;
  out.pgo_circ = c.circ / scalars;
  return out;
}

std::vector<long long> weyl_poincare(const Diagram& d) {
  const auto nodes = d.nodes().to_vector();
  const int n = static_cast<int>(nodes.size());
  std::vector<int> pos(TypeSet::kMaxNode + 1, -1);
  for (int i = 0; i < n; ++i) pos[nodes[i]] = i;

  // simple reflection matrices on the root lattice
  std::vector<std::vector<int>> refl(n, std::vector<int>(n * n, 0));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) {
        int entry = (i == j) ? 1 : 0;
        if (i == k) {
          int c = (j == k) ? 2 : (d.has_edge(nodes[k], nodes[j]) ? -1 : 0);
          entry -= c;
        }
        refl[k][i * n + j] = entry;
      }
    }
  }
  auto mul = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(n * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const int v = a[i * n + k];
        if (!v) continue;
        for (int j = 0; j < n; ++j) out[i * n + j] += v * b[k * n + j];
      }
    return out;
  };
  auto key = [n](const std::vector<int>& m) {
    std::string s;
    for (int x : m) s += static_cast<char>(x + 64);
    return s;
  };

  std::vector<int> id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  std::map<std::string, int> length{{key(id), 0}};
  std::vector<std::vector<int>> frontier{id};
  std::vector<long long> coeffs{1};
  int l = 0;
  while (!frontier.empty()) {
    ++l;
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int k = 0; k < n; ++k) {
        auto ws = mul(w, refl[k]);
        auto ky = key(ws);
        if (length.emplace(ky, l).second) next.push_back(ws);
      }
    if (!next.empty()) {
      coeffs.push_back(static_cast<long long>(next.size()));
    }
    frontier = std::move(next);
  }
  return coeffs;
}

unsigned long long poincare_at(const std::vector<long long>& coeffs, int q) {
  unsigned long long s = 0, p = 1;
  for (long long c : coeffs) {
    s += static_cast<unsigned long long>(c) * p;
    p *= static_cast<unsigned long long>(q);
  }
  return s;
}

}  // namespace projlens::oracles
