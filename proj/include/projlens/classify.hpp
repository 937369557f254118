#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projlens/diagram.hpp"

namespace projlens {

enum class NValue { kUnresolved = 0, kOne = 1, kTwo = 2 };

enum class DecidedBy {
  kNotSelfOpposite,
  kPolarClosed,
  kDuality,
  kPanel,
  kUnresolved,
};

const char* decided_by_name(DecidedBy d);  // "NOT_SELF_OPPOSITE", ...

/// The n(J) decision together with everything that justifies it.
struct Verdict {
  NValue n = NValue::kUnresolved;
  DecidedBy decided_by = DecidedBy::kUnresolved;
  bool self_opposite = false;
  bool polar_closed = false;
  /// Composite of global and residual opposition on the cotype;
  /// defined only when self_opposite holds.
  std::optional<DiagramMap> delta;
  /// Ordered partition realising polar closure, when it exists.
  std::optional<std::vector<TypeSet>> witness;
};

bool self_opposite(const Diagram& d, TypeSet j);

/// Polar types of every connected component, in ambient labels,
/// sorted by bitmask. Accepts reducible and empty diagrams.
std::vector<TypeSet> polar_types_of(const Diagram& d);

struct PolarClosedResult {
  bool closed = false;
  std::vector<TypeSet> witness;  // removal order when closed
};

/// Exhaustive memoized search for an ordered partition of J into
/// polar types of the successive residues. The empty set is vacuously
/// polar closed.
PolarClosedResult is_polar_closed(const Diagram& d, TypeSet j);

/// Componentwise opposition of the diagram induced on nodes \ J.
DiagramMap residual_opposition(const Diagram& d, TypeSet j);

/// i -> residual_opposition(opposition(i)) on nodes \ J; the type map
/// of a perspectivity between opposite simplices of self-opposite
/// type J. Throws when J is not self-opposite.
DiagramMap delta_map(const Diagram& d, TypeSet j);

/// Decide n(J) for a connected ADE diagram and proper nonempty J, in
/// fixed order: not self-opposite (n=1), polar closed (n=1),
/// nontrivial delta (n=2), panel (n=1), otherwise unresolved.
Verdict n_of(const Diagram& d, TypeSet j);

enum class TypeFilter {
  kAllProperNonempty,
  kSelfOpposite,
  kPolarClosed,
  kSelfOppositeWithBigComponent,
  kNEquals2,
};

TypeFilter filter_from_name(const std::string& name);
const char* filter_name(TypeFilter f);

/// Proper nonempty subsets passing the filter, ascending bitmask order.
std::vector<TypeSet> enumerate_types(const Diagram& d, TypeFilter f);

struct KernelResult {
  TypeSet kernel;
  bool unique = false;
};

/// Smallest nonempty J (by size, then bitmask) such that global
/// opposition preserves nodes \ J and agrees there with the
/// componentwise opposition of the induced diagram; reports whether
/// the minimum is unique.
KernelResult smallest_opposition_kernel(const Diagram& d);

std::string to_json(const Verdict& v);

}  // namespace projlens
