#include "projlens/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "projlens/roots.hpp"

namespace projlens {

const char* decided_by_name(DecidedBy d) {
  switch (d) {
    case DecidedBy::kNotSelfOpposite: return "NOT_SELF_OPPOSITE";
    case DecidedBy::kPolarClosed: return "POLAR_CLOSED";
    case DecidedBy::kDuality: return "DUALITY";
    case DecidedBy::kPanel: return "PANEL";
    case DecidedBy::kUnresolved: return "UNRESOLVED";
  }
  return "?";
}

bool self_opposite(const Diagram& d, TypeSet j) {
  if (!j.subset_of(d.nodes())) throw std::invalid_argument("self_opposite: J not a node subset");
  return opposition(d).image_of(j) == j;
}

std::vector<TypeSet> polar_types_of(const Diagram& d) {
  std::vector<TypeSet> out;
  for (TypeSet comp : components(d)) out.push_back(polar_type(induced(d, comp)));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// DFS over residues; failed remaining-node sets are memoized. The
// first successful branch in polar-type order yields the witness.
bool polar_closed_dfs(const Diagram& d, TypeSet remaining, TypeSet jleft,
                      std::unordered_map<std::uint32_t, bool>& failed,
                      std::vector<TypeSet>& witness) {
  if (jleft.empty()) return true;
  auto it = failed.find(remaining.bits());
  if (it != failed.end()) return false;
  for (TypeSet p : polar_types_of(induced(d, remaining))) {
    if (!p.subset_of(jleft)) continue;
    witness.push_back(p);
    if (polar_closed_dfs(d, remaining.minus(p), jleft.minus(p), failed, witness)) return true;
    witness.pop_back();
  }
  failed.emplace(remaining.bits(), true);
  return false;
}

}  // namespace

PolarClosedResult is_polar_closed(const Diagram& d, TypeSet j) {
  if (!j.subset_of(d.nodes())) throw std::invalid_argument("is_polar_closed: J not a node subset");
  PolarClosedResult r;
  std::unordered_map<std::uint32_t, bool> failed;
  r.closed = polar_closed_dfs(d, d.nodes(), j, failed, r.witness);
  if (!r.closed) r.witness.clear();
  return r;
}

DiagramMap residual_opposition(const Diagram& d, TypeSet j) {
  if (!j.subset_of(d.nodes()))
    throw std::invalid_argument("residual_opposition: J not a node subset");
  return opposition(induced(d, d.nodes().minus(j)));
}

DiagramMap delta_map(const Diagram& d, TypeSet j) {
  if (!self_opposite(d, j)) throw std::invalid_argument("delta_map: J is not self-opposite");
  TypeSet cotype = d.nodes().minus(j);
  DiagramMap glob = opposition(d);
  DiagramMap res = residual_opposition(d, j);
  DiagramMap delta;
  for (int v : cotype.to_vector()) delta.set(v, res(glob(v)));
  return delta;
}

Verdict n_of(const Diagram& d, TypeSet j) {
  if (!d.connected()) throw std::invalid_argument("n_of: diagram must be connected");
  if (j.empty() || j == d.nodes() || !j.subset_of(d.nodes()))
    throw std::invalid_argument("n_of: J must be a proper nonempty node subset");

  Verdict v;
  v.self_opposite = self_opposite(d, j);
  auto pc = is_polar_closed(d, j);
  v.polar_closed = pc.closed;
  if (pc.closed) v.witness = pc.witness;

  if (!v.self_opposite) {
    v.n = NValue::kOne;
    v.decided_by = DecidedBy::kNotSelfOpposite;
    return v;
  }
  v.delta = delta_map(d, j);
  if (v.polar_closed) {
    v.n = NValue::kOne;
    v.decided_by = DecidedBy::kPolarClosed;
    return v;
  }
  if (!v.delta->is_identity()) {
    v.n = NValue::kTwo;
    v.decided_by = DecidedBy::kDuality;
    return v;
  }
  if (d.nodes().minus(j).size() == 1) {
    v.n = NValue::kOne;
    v.decided_by = DecidedBy::kPanel;
    return v;
  }
  v.n = NValue::kUnresolved;
  v.decided_by = DecidedBy::kUnresolved;
  return v;
}

TypeFilter filter_from_name(const std::string& name) {
  if (name == "all-proper-nonempty") return TypeFilter::kAllProperNonempty;
  if (name == "self-opposite") return TypeFilter::kSelfOpposite;
  if (name == "polar-closed") return TypeFilter::kPolarClosed;
  if (name == "self-opposite-with-big-component")
    return TypeFilter::kSelfOppositeWithBigComponent;
  if (name == "n-equals-2") return TypeFilter::kNEquals2;
  throw std::invalid_argument("unknown filter: " + name);
}

const char* filter_name(TypeFilter f) {
  switch (f) {
    case TypeFilter::kAllProperNonempty: return "all-proper-nonempty";
    case TypeFilter::kSelfOpposite: return "self-opposite";
    case TypeFilter::kPolarClosed: return "polar-closed";
    case TypeFilter::kSelfOppositeWithBigComponent:
      return "self-opposite-with-big-component";
    case TypeFilter::kNEquals2: return "n-equals-2";
  }
  return "?";
}

std::vector<TypeSet> enumerate_types(const Diagram& d, TypeFilter f) {
  if (!d.connected()) throw std::invalid_argument("enumerate_types: diagram must be connected");
  const DiagramMap opp = opposition(d);
  std::vector<TypeSet> out;
  const std::uint32_t all = d.nodes().bits();
  // Ascending subset-of-nodes order via the subset enumeration trick.
  for (std::uint32_t m = (all - 1) & all; m; m = (m - 1) & all) {
    TypeSet j(m);
    bool keep = false;
    switch (f) {
      case TypeFilter::kAllProperNonempty:
        keep = true;
        break;
      case TypeFilter::kSelfOpposite:
        keep = opp.image_of(j) == j;
        break;
      case TypeFilter::kPolarClosed:
        keep = is_polar_closed(d, j).closed;
        break;
      case TypeFilter::kSelfOppositeWithBigComponent: {
        if (opp.image_of(j) == j)
          for (TypeSet c : components(induced(d, d.nodes().minus(j))))
            if (c.size() >= 2) keep = true;
        break;
      }
      case TypeFilter::kNEquals2:
        keep = n_of(d, j).n == NValue::kTwo;
        break;
    }
    if (keep) out.push_back(j);
  }
  std::reverse(out.begin(), out.end());  // the trick enumerates descending
  return out;
}

namespace {

bool kernel_property(const Diagram& d, const DiagramMap& glob, TypeSet j) {
  TypeSet rest = d.nodes().minus(j);
  if (glob.image_of(rest) != rest) return false;
  DiagramMap res = opposition(induced(d, rest));
  for (int v : rest.to_vector())
    if (res(v) != glob(v)) return false;
  return true;
}

}  // namespace

KernelResult smallest_opposition_kernel(const Diagram& d) {
  if (!d.connected())
    throw std::invalid_argument("smallest_opposition_kernel: diagram must be connected");
  const DiagramMap glob = opposition(d);
  std::vector<TypeSet> subsets;
  const std::uint32_t all = d.nodes().bits();
  for (std::uint32_t m = (all - 1) & all; m; m = (m - 1) & all) subsets.push_back(TypeSet(m));
  subsets.push_back(d.nodes());
  std::sort(subsets.begin(), subsets.end(), [](TypeSet a, TypeSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });

  KernelResult r;
  bool found = false;
  int found_size = -1;
  for (TypeSet j : subsets) {
    if (found && j.size() > found_size) break;
    if (kernel_property(d, glob, j)) {
      if (!found) {
        r.kernel = j;
        r.unique = true;
        found = true;
        found_size = j.size();
      } else {
        r.unique = false;
      }
    }
  }
  if (!found) throw std::logic_error("smallest_opposition_kernel: no subset qualifies");
  return r;
}

std::string to_json(const Verdict& v) {
  std::ostringstream os;
  os << "{\"n\":";
  switch (v.n) {
    case NValue::kOne: os << 1; break;
    case NValue::kTwo: os << 2; break;
    case NValue::kUnresolved: os << "\"unresolved\""; break;
  }
  os << ",\"decided_by\":\"" << decided_by_name(v.decided_by) << "\"";
  os << ",\"self_opposite\":" << (v.self_opposite ? "true" : "false");
  os << ",\"polar_closed\":" << (v.polar_closed ? "true" : "false");
  os << ",\"delta\":";
  if (v.delta) {
    os << '{';
    bool first = true;
    for (int x : v.delta->domain().to_vector()) {
      if (!first) os << ',';
      os << '"' << x << "\":" << (*v.delta)(x);
      first = false;
    }
    os << '}';
  } else {
    os << "null";
  }
  os << ",\"witness\":";
  if (v.witness) {
    os << '[';
    bool first = true;
    for (TypeSet p : *v.witness) {
      if (!first) os << ',';
      os << '[';
      bool f2 = true;
      for (int x : p.to_vector()) {
        if (!f2) os << ',';
        os << x;
        f2 = false;
      }
      os << ']';
      first = false;
    }
    os << ']';
  } else {
    os << "null";
  }
  os << '}';
  return os.str();
}

}  // namespace projlens
