#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "projlens/diagram.hpp"
#include "projlens/gfq.hpp"

namespace projlens {

enum class GeomKind { kProjective, kHyperbolic };

/// A concrete finite building: the flag complex of PG(rank, q)
/// (type A_rank) or the oriflamme complex of a hyperbolic quadric of
/// Witt index rank over F_q (type D_rank).
///
/// Types follow the Bourbaki labels of the diagram. For the quadric,
/// types 1..rank-2 are totally singular subspaces of that vector
/// dimension; types rank-1 and rank are the two classes of maximal
/// totally singular subspaces (class fixed by intersection parity with
/// a reference generator), and a chamber holds one generator of each
/// class meeting in vector codimension one.
class Geometry {
 public:
  static Geometry projective(int rank, int q);
  static Geometry hyperbolic(int rank, int q);
  /// "A2", "D4", ... with a field flag, e.g. from the CLI.
  static Geometry from_tag(const std::string& tag, int q);

  GeomKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int q() const { return field_->q(); }
  int vdim() const { return vdim_; }
  const gf::Fq& field() const { return *field_; }
  const Diagram& diagram() const { return diagram_; }
  const DiagramMap& type_opposition() const { return opp_; }
  std::string tag() const;

  // quadratic-form helpers (hyperbolic only)
  int qval(const std::uint8_t* v) const;
  int bval(const std::uint8_t* u, const std::uint8_t* v) const;
  const gf::Mat& gram() const { return gram_; }
  gf::Subspace perp(const gf::Subspace& u) const;
  bool totally_singular(const gf::Subspace& u) const;
  /// rank-1 or rank, decided by dim(intersection with the reference
  /// generator) mod 2.
  int generator_type(const gf::Subspace& m) const;
  const gf::Subspace& reference_generator() const { return ref_gen_; }
  /// The two maximal totally singular subspaces through a totally
  /// singular subspace of vector dimension rank-1, sorted.
  std::pair<gf::Subspace, gf::Subspace> generators_through(const gf::Subspace& h) const;

 private:
  Geometry() = default;
  GeomKind kind_ = GeomKind::kProjective;
  int rank_ = 0, vdim_ = 0;
  std::shared_ptr<gf::Fq> field_;
  Diagram diagram_;
  DiagramMap opp_;
  gf::Mat gram_;
  gf::Subspace ref_gen_;
};

/// A flag: one subspace per type in `types`. Parts are stored in
/// ascending type order.
class Flag {
 public:
  Flag() = default;
  TypeSet types() const { return types_; }
  const gf::Subspace& part(int type) const;
  void set_part(int type, const gf::Subspace& s);
  int part_count() const { return count_; }
  const gf::Subspace& part_at(int slot) const { return parts_[slot]; }
  int type_at(int slot) const;

  std::vector<std::uint8_t> key() const;
  void append_key(std::vector<std::uint8_t>& out) const;

  bool operator==(const Flag& o) const;
  bool operator<(const Flag& o) const;

 private:
  TypeSet types_;
  std::uint8_t count_ = 0;
  std::array<gf::Subspace, 6> parts_{};
};

using Chamber = Flag;

/// All flags of the given type set, sorted canonically. Throws when
/// the estimated chamber count exceeds the size guard.
std::vector<Flag> enumerate_flags(const Geometry& g, TypeSet types);

std::vector<Chamber> enumerate_chambers(const Geometry& g);

/// Flags extending `base` to the full type set, sorted: the chambers
/// containing the flag, i.e. its residue.
std::vector<Chamber> residue_domain(const Geometry& g, const Flag& base);

/// Chambers that agree with `c` outside type t (the panel of cotype t),
/// including c itself.
std::vector<Chamber> panel_chambers(const Geometry& g, const Chamber& c, int t);

/// typ(F') must equal typ(F)^opp; then componentwise opposition:
/// A: U_i and U'_{r+1-i} intersect trivially; D: X and perp(Y)
/// intersect trivially for matching parts.
bool is_opposite(const Geometry& g, const Flag& a, const Flag& b);

/// Closed-form projection of a chamber containing `from` to the
/// chamber containing `to`, for opposite flags. Hyperbolic geometries
/// support single-vertex flags.
Chamber perspectivity_apply(const Geometry& g, const Flag& from, const Flag& to,
                            const Chamber& c);

struct ChamberGraph {
  std::vector<Chamber> chambers;                       // sorted
  std::vector<std::vector<std::int32_t>> adj;          // [chamber][edge] neighbours
  std::vector<std::vector<std::int32_t>> adj_by_type;  // [chamber*rank + (t-1)]
  int rank = 0;

  int index_of(const Chamber& c) const;  // -1 if absent
};

/// Builds (or loads from PROJLENS_CACHE_DIR) the full chamber graph.
ChamberGraph build_chamber_graph(const Geometry& g);

/// BFS projection oracle: the unique chamber containing `target` at
/// minimal gallery distance from `from`. Throws on non-uniqueness.
Chamber gallery_projection_oracle(const Geometry& g, const ChamberGraph& graph,
                                  const Flag& target, const Chamber& from,
                                  int* distance_out = nullptr);

/// Matrix action on flags (left action v -> v g^T on every part).
Flag apply_matrix(const Geometry& g, const gf::Mat& m, const Flag& f);

}  // namespace projlens
