#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace projlens {

enum class Family : char { A = 'A', D = 'D', E = 'E' };

char family_char(Family f);
Family family_from_char(char c);

/// A subset of diagram node labels, bit-indexed. Labels are 1-based and
/// bounded by kMaxNode so that a 32-bit mask covers everything this
/// library ever touches (ambient ranks stay <= 9).
class TypeSet {
 public:
  static constexpr int kMaxNode = 31;

  constexpr TypeSet() = default;
  constexpr explicit TypeSet(std::uint32_t bits) : bits_(bits) {}
  static TypeSet of(std::initializer_list<int> labels);
  static TypeSet from_vector(const std::vector<int>& labels);
  static TypeSet single(int label);
  /// Consecutive labels lo..hi inclusive.
  static TypeSet interval(int lo, int hi);

  bool contains(int v) const { return (bits_ >> v) & 1u; }
  bool empty() const { return bits_ == 0; }
  int size() const;
  bool subset_of(TypeSet o) const { return (bits_ & ~o.bits_) == 0; }
  int min() const;  // smallest label; -1 when empty
  int max() const;

  TypeSet operator|(TypeSet o) const { return TypeSet(bits_ | o.bits_); }
  TypeSet operator&(TypeSet o) const { return TypeSet(bits_ & o.bits_); }
  TypeSet minus(TypeSet o) const { return TypeSet(bits_ & ~o.bits_); }
  TypeSet with(int v) const { return TypeSet(bits_ | (1u << v)); }
  TypeSet without(int v) const { return TypeSet(bits_ & ~(1u << v)); }

  std::vector<int> to_vector() const;  // ascending
  std::uint32_t bits() const { return bits_; }
  std::string to_string() const;  // "{1,2,6}"

  auto operator<=>(const TypeSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A node map, total and bijective on its stated domain.
class DiagramMap {
 public:
  DiagramMap() = default;
  static DiagramMap identity(TypeSet domain);

  void set(int from, int to);
  int operator()(int v) const { return img_[v]; }
  TypeSet domain() const { return domain_; }
  TypeSet image_of(TypeSet s) const;
  bool is_identity() const;
  bool is_involution() const;
  /// this(inner(x)); the composite's domain is inner's domain.
  DiagramMap after(const DiagramMap& inner) const;

  bool operator==(const DiagramMap& o) const;

 private:
  TypeSet domain_;
  std::array<std::uint8_t, TypeSet::kMaxNode + 1> img_{};
};

/// Simply laced Coxeter diagram: a graph on labelled nodes where every
/// edge carries bond weight 3. Construction validates nothing beyond
/// endpoint sanity; ADE shape is checked where operations require it.
class Diagram {
 public:
  Diagram() = default;
  Diagram(TypeSet nodes, const std::vector<std::pair<int, int>>& edges);

  TypeSet nodes() const { return nodes_; }
  int rank() const { return nodes_.size(); }
  std::vector<std::pair<int, int>> edges() const;  // sorted pairs (a<b)
  TypeSet neighbours(int v) const { return TypeSet(adj_[v]); }
  int degree(int v) const;
  bool has_edge(int a, int b) const;
  bool connected() const;

  const std::optional<std::pair<Family, int>>& family_hint() const { return hint_; }
  void set_family_hint(Family f, int rank) { hint_ = {f, rank}; }

  bool operator==(const Diagram& o) const;

 private:
  TypeSet nodes_;
  std::array<std::uint32_t, TypeSet::kMaxNode + 1> adj_{};
  std::optional<std::pair<Family, int>> hint_;
};

struct ShapeInfo {
  Family family;
  int rank;
  DiagramMap relabel;  // node of d -> Bourbaki label of make_diagram(family, rank)
};

/// Canonical Bourbaki-labelled diagram. A: rank >= 1; D: rank >= 4;
/// E: rank in {6,7,8}. Throws std::invalid_argument otherwise.
Diagram make_diagram(Family f, int rank);

/// Subdiagram on S with inherited labels and edges. S must be a subset
/// of the nodes.
Diagram induced(const Diagram& d, TypeSet s);

/// Connected components, ordered by smallest label.
std::vector<TypeSet> components(const Diagram& d);

/// Recognize the A/D/E shape of a connected diagram and produce the
/// relabelling onto the canonical diagram. Ties (D_4 triality, the E_6
/// arm swap, path direction) break toward the lexicographically
/// smallest image sequence over ascending node labels; for D_4 the
/// degree-3 node maps to 2 and the leaves to 1,3,4 in ascending order.
ShapeInfo classify_shape(const Diagram& d);

std::string to_json(const Diagram& d);

}  // namespace projlens
