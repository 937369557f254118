#include "projlens/levi.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace projlens {

using gf::Fq;
using gf::Mat;

int BlockPattern::block_of(int i) const {
  if (i < d1) return 0;
  if (i < d1 + d2) return 1;
  return 2;
}

bool BlockPattern::in_p(int i, int j) const {
  const int bi = block_of(i), bj = block_of(j);
  if (bi < bj) return true;
  if (bi > bj) return false;
  return bi == 1 || i <= j;  // middle block full, corners triangular
}

bool BlockPattern::in_u(int i, int j) const {
  const int bi = block_of(i), bj = block_of(j);
  if (bi < bj) return true;
  if (bi > bj) return false;
  return bi != 1 && i < j;  // strict triangular corners, identity middle
}

bool BlockPattern::in_l(int i, int j) const {
  const int bi = block_of(i), bj = block_of(j);
  if (bi != bj) return false;
  return bi == 1 || i == j;  // block-diagonal: full middle, diagonal corners
}

BlockPattern parabolic_masks(int d, TypeSet j) {
  if (d < 1) throw std::invalid_argument("parabolic_masks: d >= 1");
  if (!j.subset_of(TypeSet::interval(1, d)))
    throw std::invalid_argument("parabolic_masks: J must lie in {1..d}");
  int d1 = 0;
  while (j.contains(d1 + 1)) ++d1;
  int d3 = 0;
  while (j.contains(d - d3)) ++d3;
  if (d1 + d3 > d + 1) {  // overlapping prefixes: J = {1..d}
    d1 = j.size();
    d3 = 0;
  }
  if (j != (TypeSet::interval(1, d1) | TypeSet::interval(d - d3 + 1, d)))
    throw std::invalid_argument("parabolic_masks: J must be a two-sided interval");
  BlockPattern p;
  p.d = d;
  p.d1 = d1;
  p.d3 = d3;
  p.d2 = d + 1 - d1 - d3;
  return p;
}

std::pair<Mat, Mat> levi_factorization(const Fq& f, const Mat& m, const BlockPattern& p) {
  const int n = p.size();
  if (m.rows != n || m.cols != n) throw std::invalid_argument("levi_factorization: wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!p.in_p(i, j) && m.at(i, j) != 0)
        throw std::invalid_argument("levi_factorization: matrix not in the stabilizer mask");

  // l carries the diagonal of the corners and the full middle block
  Mat l = Mat::zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.in_l(i, j)) l.at(i, j) = m.at(i, j);
  for (int i = 0; i < n; ++i)
    if (p.block_of(i) != 1 && l.at(i, i) == 0)
      throw std::invalid_argument("levi_factorization: singular corner");
  Mat u = mat_mul(f, m, gf::inverse(f, l));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (u.at(i, j) != 1) throw std::logic_error("levi_factorization: unipotent part broken");
      } else if (u.at(i, j) != 0 && !p.in_u(i, j)) {
        throw std::logic_error("levi_factorization: unipotent mask broken");
      }
    }
  return {u, l};
}

namespace {

// Odometer over the free entries of a mask; `diag` selects what the
// fixed diagonal is (1 for unipotent, enumerated for the others).
template <typename Pred, typename Emit>
void enumerate_mask(const Fq& f, int n, Pred free_at, Emit emit) {
  std::vector<std::pair<int, int>> free_pos;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (free_at(i, j)) free_pos.emplace_back(i, j);
  std::vector<std::uint8_t> vals(free_pos.size(), 0);
  const int q = f.q();
  for (;;) {
    Mat m = Mat::identity(n);
    for (std::size_t k = 0; k < free_pos.size(); ++k)
      m.at(free_pos[k].first, free_pos[k].second) = vals[k];
    emit(m);
    std::size_t i = 0;
    for (; i < vals.size(); ++i) {
      if (++vals[i] < q) break;
      vals[i] = 0;
    }
    if (i == vals.size()) break;
  }
}

}  // namespace

std::vector<Mat> enumerate_unipotent(const Fq& f, const BlockPattern& p) {
  std::vector<Mat> out;
  enumerate_mask(
      f, p.size(), [&](int i, int j) { return p.in_u(i, j); },
      [&](const Mat& m) { out.push_back(m); });
  return out;
}

std::vector<Mat> enumerate_parabolic(const Fq& f, const BlockPattern& p) {
  std::vector<Mat> out;
  enumerate_mask(
      f, p.size(), [&](int i, int j) { return p.in_p(i, j); },
      [&](const Mat& m) {
        // block upper triangular: invertible iff every diagonal block is
        if (gf::det(f, m) != 0) out.push_back(m);
      });
  return out;
}

Flag standard_flag(const Geometry& g, TypeSet j) {
  Flag f;
  for (int t : j.to_vector()) {
    Mat m = Mat::zero(t, g.vdim());
    for (int i = 0; i < t; ++i) m.at(i, i) = 1;
    f.set_part(t, gf::Subspace::from_rows(g.field(), m));
  }
  return f;
}

UnipotentReport unipotent_transitivity_check(const Geometry& g, TypeSet j) {
  if (g.kind() != GeomKind::kProjective)
    throw std::invalid_argument("unipotent_transitivity_check: projective geometries only");
  const Fq& f = g.field();
  const BlockPattern p = parabolic_masks(g.rank(), j);
  const Flag base = standard_flag(g, j);

  UnipotentReport rep;
  const auto unip = enumerate_unipotent(f, p);
  rep.u_order = unip.size();

  const TypeSet j_opp = g.type_opposition().image_of(j);
  std::vector<Flag> opposite;
  for (const Flag& cand : enumerate_flags(g, j_opp))
    if (is_opposite(g, base, cand)) opposite.push_back(cand);
  rep.opposite_flags = opposite.size();

  // orbit of one opposite flag must hit each opposite flag exactly once
  rep.sharply_transitive = false;
  if (!opposite.empty() && rep.u_order == rep.opposite_flags) {
    std::vector<Flag> images;
    for (const Mat& u : unip) images.push_back(apply_matrix(g, u, opposite.front()));
    std::sort(images.begin(), images.end());
    const bool distinct = std::adjacent_find(images.begin(), images.end()) == images.end();
    rep.sharply_transitive = distinct && images == opposite;
  }

  rep.fixes_residue = true;
  const auto domain = residue_domain(g, base);
  for (const Mat& u : unip) {
    for (const Chamber& c : domain)
      if (!(apply_matrix(g, u, c) == c)) {
        rep.fixes_residue = false;
        break;
      }
    if (!rep.fixes_residue) break;
  }
  return rep;
}

std::string UnipotentReport::to_json() const {
  std::ostringstream os;
  os << "{\"u_order\":" << u_order << ",\"opposite_flags\":" << opposite_flags
     << ",\"sharply_transitive\":" << (sharply_transitive ? "true" : "false")
     << ",\"fixes_residue\":" << (fixes_residue ? "true" : "false") << '}';
  return os.str();
}

}  // namespace projlens
