#pragma once

#include <string>
#include <utility>
#include <vector>

#include "projlens/classify.hpp"
#include "projlens/diagram.hpp"

namespace projlens {

enum class GroupKind {
  kPGL,
  kPSLa,       // matrices whose determinant is an a-th power, mod scalars
  kPGO,        // isometries mod scalars
  kPGOCirc,    // isometries preserving both generator classes
  kBarPGO,     // similitudes
  kBarPGOCirc,
  kBarPOmega,  // commutator subgroup extended by diagonal automorphisms
  kPGE6,
  kPGE7,
};

/// Symbolic name of a projectivity group. `degree` is the matrix size
/// (2r for the orthogonal kinds); `a` is set only for kPSLa;
/// `duality_ext` marks the general group when it strictly extends the
/// special one (displayed as ".2" for the linear kinds).
struct GroupName {
  GroupKind kind;
  int degree = 0;
  int a = 0;
  bool duality_ext = false;

  /// Proper subgroup of the full linear type-preserving group of the
  /// residue: determinant-restricted linear groups, bar-less
  /// orthogonal groups, and the diagonal extension of POmega.
  bool grey() const;

  /// `field` 'K' or 'L'; `pgl_style_a` prints kPSLa as PGL_n(K,a)
  /// rather than PSL_n(K,a).
  std::string render(char field = 'K', bool pgl_style_a = false) const;

  bool operator==(const GroupName&) const = default;
};

struct TableRow {
  std::string ref;  // row label: A1, A3, A, A*, A**, D, D', A2, ..., E7
  Family ambient;
  int ambient_rank = 0;
  Family residue_family;
  int residue_rank = 0;
  std::string cotype_cond;  // rendered condition, "*" when unconditional
  GroupName pi_plus;
  GroupName pi;      // the n(J)=2 column as printed
  bool bysame = false;  // printed as a hyphen: type never self-opposite
  bool grey_row = false;
  bool polar_closed_mark = false;
  std::string note;  // row metadata (notation discrepancies etc.)
};

/// Rows applicable to the given ambient diagram, instantiated and in
/// print order. Supports (D, r>=4), (E, 6|7|8) and (A, r>=2) (the
/// latter is the single natural-action rule).
std::vector<TableRow> table_rows(Family f, int rank);

/// Look up the (pi_plus, pi) pair for a simplex type J whose cotype is
/// nonempty, connected and proper. pi is derived from the matching
/// row's printed pair and the computed n(J): when n(J) = 1 the general
/// group equals the special one even if the printed row lists an
/// extension. Throws std::domain_error("not covered: reducible
/// residue") for disconnected cotypes.
std::pair<GroupName, GroupName> projectivity_groups(Family f, int rank, TypeSet j);

/// Byte-stable rendering of the applicable rows (golden-file format).
std::string render_table(Family f, int rank);

}  // namespace projlens
