#include "projlens/diagram.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace projlens {

char family_char(Family f) { return static_cast<char>(f); }

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'D': case 'd': return Family::D;
    case 'E': case 'e': return Family::E;
  }
  throw std::invalid_argument("unknown diagram family");
}

TypeSet TypeSet::of(std::initializer_list<int> labels) {
  TypeSet s;
  for (int v : labels) s = s.with(v);
  return s;
}

TypeSet TypeSet::from_vector(const std::vector<int>& labels) {
  TypeSet s;
  for (int v : labels) s = s.with(v);
  return s;
}

TypeSet TypeSet::single(int label) { return TypeSet().with(label); }

TypeSet TypeSet::interval(int lo, int hi) {
  TypeSet s;
  for (int v = lo; v <= hi; ++v) s = s.with(v);
  return s;
}

int TypeSet::size() const { return std::popcount(bits_); }

int TypeSet::min() const { return bits_ ? std::countr_zero(bits_) : -1; }

int TypeSet::max() const { return bits_ ? 31 - std::countl_zero(bits_) : -1; }

std::vector<int> TypeSet::to_vector() const {
  std::vector<int> v;
  for (std::uint32_t b = bits_; b; b &= b - 1) v.push_back(std::countr_zero(b));
  return v;
}

std::string TypeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

DiagramMap DiagramMap::identity(TypeSet domain) {
  DiagramMap m;
  m.domain_ = domain;
  for (int v : domain.to_vector()) m.img_[v] = static_cast<std::uint8_t>(v);
  return m;
}

void DiagramMap::set(int from, int to) {
  domain_ = domain_.with(from);
  img_[from] = static_cast<std::uint8_t>(to);
}

TypeSet DiagramMap::image_of(TypeSet s) const {
  TypeSet out;
  for (int v : s.to_vector()) out = out.with(img_[v]);
  return out;
}

bool DiagramMap::is_identity() const {
  for (int v : domain_.to_vector())
    if (img_[v] != v) return false;
  return true;
}

bool DiagramMap::is_involution() const {
  for (int v : domain_.to_vector()) {
    int w = img_[v];
    if (!domain_.contains(w) || img_[w] != v) return false;
  }
  return true;
}

DiagramMap DiagramMap::after(const DiagramMap& inner) const {
  DiagramMap m;
  m.domain_ = inner.domain_;
  for (int v : inner.domain_.to_vector()) m.img_[v] = img_[inner.img_[v]];
  return m;
}

bool DiagramMap::operator==(const DiagramMap& o) const {
  if (domain_ != o.domain_) return false;
  for (int v : domain_.to_vector())
    if (img_[v] != o.img_[v]) return false;
  return true;
}

Diagram::Diagram(TypeSet nodes, const std::vector<std::pair<int, int>>& edges)
    : nodes_(nodes) {
  for (auto [a, b] : edges) {
    if (a == b || !nodes.contains(a) || !nodes.contains(b))
      throw std::invalid_argument("edge endpoints must be distinct diagram nodes");
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
  }
}

std::vector<std::pair<int, int>> Diagram::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int a : nodes_.to_vector())
    for (int b : TypeSet(adj_[a]).to_vector())
      if (a < b) e.emplace_back(a, b);
  std::sort(e.begin(), e.end());
  return e;
}

int Diagram::degree(int v) const { return std::popcount(adj_[v]); }

bool Diagram::has_edge(int a, int b) const { return (adj_[a] >> b) & 1u; }

bool Diagram::connected() const {
  if (nodes_.empty()) return false;
  std::uint32_t seen = 1u << nodes_.min();
  for (;;) {
    std::uint32_t next = seen;
    for (std::uint32_t b = seen; b; b &= b - 1) next |= adj_[std::countr_zero(b)];
    next &= nodes_.bits();
    if (next == seen) break;
    seen = next;
  }
  return seen == nodes_.bits();
}

bool Diagram::operator==(const Diagram& o) const {
  if (nodes_ != o.nodes_) return false;
  for (int v : nodes_.to_vector())
    if (adj_[v] != o.adj_[v]) return false;
  return true;
}

Diagram make_diagram(Family f, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (f) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("A_r needs rank >= 1");
      for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::D:
      if (rank < 4) throw std::invalid_argument("D_r needs rank >= 4");
      for (int i = 1; i <= rank - 2; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 2, rank);
      break;
    case Family::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("E_r needs rank in {6,7,8}");
      edges = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      for (int i = 6; i < rank; ++i) edges.emplace_back(i, i + 1);
      break;
  }
  if (rank > TypeSet::kMaxNode) throw std::invalid_argument("rank too large");
  Diagram d(TypeSet::interval(1, rank), edges);
  d.set_family_hint(f, rank);
  return d;
}

Diagram induced(const Diagram& d, TypeSet s) {
  if (!s.subset_of(d.nodes())) throw std::invalid_argument("induced: not a node subset");
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : d.edges())
    if (s.contains(a) && s.contains(b)) edges.emplace_back(a, b);
  return Diagram(s, edges);
}

std::vector<TypeSet> components(const Diagram& d) {
  std::vector<TypeSet> out;
  std::uint32_t left = d.nodes().bits();
  while (left) {
    std::uint32_t seen = left & (~left + 1);  // lowest remaining node
    for (;;) {
      std::uint32_t next = seen;
      for (std::uint32_t b = seen; b; b &= b - 1)
        next |= d.neighbours(std::countr_zero(b)).bits();
      next &= left;
      if (next == seen) break;
      seen = next;
    }
    out.push_back(TypeSet(seen));
    left &= ~seen;
  }
  return out;
}

namespace {

// Walk from `from` away from `avoid`; returns the node sequence.
std::vector<int> branch_path(const Diagram& d, int from, int avoid) {
  std::vector<int> path;
  int prev = avoid, cur = from;
  for (;;) {
    path.push_back(cur);
    int next = -1;
    for (int w : d.neighbours(cur).to_vector())
      if (w != prev) {
        if (next != -1) throw std::invalid_argument("classify_shape: not an ADE shape");
        next = w;
      }
    if (next == -1) return path;
    prev = cur;
    cur = next;
  }
}

DiagramMap relabel_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  DiagramMap m;
  for (auto [node, lbl] : pairs) m.set(node, lbl);
  return m;
}

std::vector<int> image_sequence(const Diagram& d, const DiagramMap& m) {
  std::vector<int> seq;
  for (int v : d.nodes().to_vector()) seq.push_back(m(v));
  return seq;
}

}  // namespace

ShapeInfo classify_shape(const Diagram& d) {
  if (d.nodes().empty() || !d.connected())
    throw std::invalid_argument("classify_shape: diagram must be connected and nonempty");
  const auto nodes = d.nodes().to_vector();
  int fork = -1;
  for (int v : nodes) {
    int deg = d.degree(v);
    if (deg > 3) throw std::invalid_argument("classify_shape: not an ADE shape");
    if (deg == 3) {
      if (fork != -1) throw std::invalid_argument("classify_shape: not an ADE shape");
      fork = v;
    }
  }
  const int n = static_cast<int>(nodes.size());

  if (fork == -1) {
    // Path graph: A_n. Two orientations; pick the lexicographically
    // smaller image sequence.
    if (n == 1) {
      ShapeInfo s{Family::A, 1, relabel_from_pairs({{nodes[0], 1}})};
      return s;
    }
    std::vector<int> ends;
    for (int v : nodes)
      if (d.degree(v) == 1) ends.push_back(v);
    if (ends.size() != 2) throw std::invalid_argument("classify_shape: not an ADE shape");
    ShapeInfo best{Family::A, n, DiagramMap()};
    bool have = false;
    for (int e : ends) {
      auto path = branch_path(d, e, -1);
      if (static_cast<int>(path.size()) != n)
        throw std::invalid_argument("classify_shape: not an ADE shape");
      DiagramMap m;
      for (int i = 0; i < n; ++i) m.set(path[i], i + 1);
      if (!have || image_sequence(d, m) < image_sequence(d, best.relabel)) {
        best.relabel = m;
        have = true;
      }
    }
    return best;
  }

  // One degree-3 node: D or E shape, classified by sorted branch lengths.
  std::vector<std::vector<int>> branches;
  for (int w : d.neighbours(fork).to_vector()) branches.push_back(branch_path(d, w, fork));
  std::sort(branches.begin(), branches.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  const std::size_t l0 = branches[0].size(), l1 = branches[1].size(), l2 = branches[2].size();

  if (l0 == 1 && l1 == 1) {
    // D_{l2+3}: long branch end gets label 1, fork gets n-2, the two
    // short leaves get n-1, n in ascending node order.
    const int rank = static_cast<int>(l2) + 3;
    DiagramMap m;
    const auto& lng = branches[2];
    for (std::size_t i = 0; i < lng.size(); ++i)
      m.set(lng[i], rank - 2 - 1 - static_cast<int>(i));
    m.set(fork, rank - 2);
    int a = branches[0][0], b = branches[1][0];
    m.set(std::min(a, b), rank - 1);
    m.set(std::max(a, b), rank);
    if (rank == 4) {
      // All three branches have length one; spec order: fork -> 2,
      // leaves -> {1,3,4} ascending.
      std::vector<int> leaves = {branches[0][0], branches[1][0], branches[2][0]};
      std::sort(leaves.begin(), leaves.end());
      m = relabel_from_pairs({{fork, 2}, {leaves[0], 1}, {leaves[1], 3}, {leaves[2], 4}});
    }
    return ShapeInfo{Family::D, rank, m};
  }

  if (l0 == 1 && l1 == 2 && (l2 == 2 || l2 == 3 || l2 == 4)) {
    const int rank = static_cast<int>(l2) + 4;
    // Bourbaki E_n: fork = 4, short leaf = 2, the 2-branch = (3,1),
    // the long branch = (5,6,...). For E_6 the two 2-branches are
    // interchangeable; try both and keep the smaller image sequence.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> choices;
    choices.emplace_back(branches[1], branches[2]);
    if (l1 == l2) choices.emplace_back(branches[2], branches[1]);
    ShapeInfo best{Family::E, rank, DiagramMap()};
    bool have = false;
    for (const auto& [two, lng] : choices) {
      DiagramMap m;
      m.set(fork, 4);
      m.set(branches[0][0], 2);
      m.set(two[0], 3);
      m.set(two[1], 1);
      for (std::size_t i = 0; i < lng.size(); ++i) m.set(lng[i], 5 + static_cast<int>(i));
      if (!have || image_sequence(d, m) < image_sequence(d, best.relabel)) {
        best.relabel = m;
        have = true;
      }
    }
    return best;
  }

  throw std::invalid_argument("classify_shape: not an ADE shape");
}

std::string to_json(const Diagram& d) {
  std::ostringstream os;
  os << "{\"nodes\":[";
  bool first = true;
  for (int v : d.nodes().to_vector()) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << "],\"edges\":[";
  first = true;
  for (auto [a, b] : d.edges()) {
    if (!first) os << ',';
    os << '[' << a << ',' << b << ']';
    first = false;
  }
  os << ']';
  if (d.family_hint()) {
    os << ",\"family\":\"" << family_char(d.family_hint()->first) << "\""
       << ",\"rank\":" << d.family_hint()->second;
  }
  os << '}';
  return os.str();
}

}  // namespace projlens
