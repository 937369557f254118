#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "projlens/fingeo.hpp"
#include "projlens/permgroup.hpp"

namespace projlens {

/// A closed chain of consecutively opposite flags together with the
/// composed permutation it induces on the residue chambers of the
/// base flag.
struct ProjectivityWord {
  std::vector<Flag> flags;  // F_0, ..., F_l with F_0 == F_l
  Perm perm;
  int parity = 0;  // l mod 2
};

/// Compose the perspectivities along `word` on the given (sorted)
/// residue domain of word.front(). Validates consecutive opposition.
ProjectivityWord self_projectivity(const Geometry& g, const std::vector<Flag>& word,
                                   const std::vector<Chamber>& domain);

/// The permutation of residue vertex types induced by a residue
/// automorphism given as a chamber permutation (identity for
/// type-preserving maps, the duality otherwise).
DiagramMap induced_type_action(const Geometry& g, const std::vector<Chamber>& domain,
                               const Perm& p);

struct BruteResult {
  Flag base;
  std::vector<Chamber> domain;
  PermGroup pi_plus{0};
  PermGroup pi{0};
  bool odd_exists = false;    // an odd-length closed walk was sampled
  bool odd_duality = false;   // some sampled odd walk permutes the types
  int walks_sampled = 0;
  std::uint64_t seed = 0;
  int budget = 0;

  std::string to_json() const;
};

/// Seeded sampling of closed walks of lengths 3 and 4 through
/// uniformly chosen admissible opposite flags. Pi is generated by the
/// sampled walk permutations, Pi^+ by rho_0^{-1} rho_i over the
/// length-3 walks together with every length-4 walk. Stops early when
/// both group orders are unchanged over five consecutive batches of
/// 25 walks.
BruteResult generate_projectivity_groups(const Geometry& g, const Flag& f, int budget,
                                         std::uint64_t seed);

/// The permutation group induced on the residue chambers of f by the
/// stabilizer of f in the group generated by elementary transvections
/// (projective geometries only, rank <= 3, q prime). `domain` must be
/// residue_domain(g, f).
PermGroup induced_stabiliser_group(const Geometry& g, const Flag& f,
                                   const std::vector<Chamber>& domain);

unsigned long long group_order(const PermGroup& g);

/// Deterministic bounded sampler (rejection on the top range), so
/// results do not depend on the standard library's distribution
/// implementations.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next();
  /// uniform in [0, n)
  std::size_t below(std::size_t n);

 private:
  std::uint64_t state_;
};

}  // namespace projlens
