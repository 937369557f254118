#pragma once

#include <cstdint>
#include <deque>
#include <vector>

namespace projlens {

/// Permutation of {0..n-1} as an image array.
using Perm = std::vector<std::int32_t>;

Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
/// (a after b)[x] = a[b[x]]
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);

/// Permutation group with an incrementally maintained stabilizer
/// chain (base-and-strong-generators). Base points are the first
/// moved domain indices; transversals are stored as Schreier trees
/// (parent point + generator index) and composed on demand, which
/// keeps memory proportional to the domain.
class PermGroup {
 public:
  explicit PermGroup(int domain_size);

  int domain() const { return n_; }
  /// Returns true when the group grew.
  bool add_generator(const Perm& g);
  bool contains(const Perm& g) const;
  unsigned long long order() const;
  /// User-supplied generators that strictly grew the group.
  const std::vector<Perm>& generators() const { return gens_; }

  int chain_length() const { return static_cast<int>(levels_.size()); }
  int base_point(int level) const { return levels_[level].base; }
  int orbit_size(int level) const { return static_cast<int>(levels_[level].orbit.size()); }

 private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;
    std::vector<std::int32_t> orbit;   // BFS discovery order, orbit[0] == base
    std::vector<std::int32_t> pos;     // point -> orbit index or -1
    std::vector<std::int32_t> parent;  // tree edge: point reached from parent[x]
    std::vector<std::int32_t> via;     // ... by applying gens[via[x]]
    std::deque<std::pair<int, int>> todo;  // unprocessed (orbit index, gen index)
  };

  Perm transversal(const Level& l, int point) const;  // base -> point
  /// Strips g through levels starting at `from`; returns the level
  /// where stripping stopped and leaves the residue in g. A residue of
  /// identity means membership.
  int sift(Perm& g, int from) const;
  void insert_generator(int level, const Perm& g);
  void extend_orbit(Level& l, int new_gen);
  void process_queues();

  int n_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

}  // namespace projlens
