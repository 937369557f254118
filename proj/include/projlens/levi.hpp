#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projlens/diagram.hpp"
#include "projlens/fingeo.hpp"
#include "projlens/gfq.hpp"

namespace projlens {

/// Block masks for the stabilizer of a standard flag whose type is a
/// two-sided interval J = {1..d1} u {d-d3+1..d} inside PG(d): the full
/// stabilizer (triangular corners), its unipotent radical and the
/// block-diagonal complement.
struct BlockPattern {
  int d = 0;             // projective dimension; matrices are (d+1)x(d+1)
  int d1 = 0, d2 = 0, d3 = 0;

  int size() const { return d + 1; }
  int block_of(int i) const;  // 0, 1, 2
  bool in_p(int i, int j) const;
  bool in_u(int i, int j) const;  // strict part only; diagonal is 1
  bool in_l(int i, int j) const;
};

/// J must be of the two-interval form; throws otherwise.
BlockPattern parabolic_masks(int d, TypeSet j);

/// Unique factorization m = u * l with u unipotent (U-mask) and l in
/// the block-diagonal complement. Throws when m does not match the
/// stabilizer mask or is singular.
std::pair<gf::Mat, gf::Mat> levi_factorization(const gf::Fq& f, const gf::Mat& m,
                                               const BlockPattern& p);

/// Every element of the stabilizer mask over F_q (pattern entries
/// free, triangular corners invertible).
std::vector<gf::Mat> enumerate_parabolic(const gf::Fq& f, const BlockPattern& p);
std::vector<gf::Mat> enumerate_unipotent(const gf::Fq& f, const BlockPattern& p);

struct UnipotentReport {
  unsigned long long u_order = 0;
  unsigned long long opposite_flags = 0;
  bool sharply_transitive = false;
  bool fixes_residue = false;

  std::string to_json() const;
};

/// Checks that the unipotent radical of the standard flag of type J
/// acts sharply transitively on the opposite flags and fixes the
/// residue pointwise, by exhaustive enumeration.
UnipotentReport unipotent_transitivity_check(const Geometry& g, TypeSet j);

/// The standard flag of type J: type t is spanned by the first t
/// basis vectors.
Flag standard_flag(const Geometry& g, TypeSet j);

}  // namespace projlens
