#pragma once

#include <vector>

#include "projlens/diagram.hpp"

namespace projlens {

/// A root written in the simple-root basis. Coefficients are indexed by
/// the position of each node in the ascending node list of the diagram
/// the root belongs to; arithmetic is exact (integers throughout).
struct Root {
  std::vector<int> coeffs;

  bool positive() const;
  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const { return coeffs < o.coeffs; }
};

/// A Weyl group element as a reduced word in simple reflections
/// (node labels) together with its integer matrix action on the root
/// lattice (column j = image of the j-th simple root).
struct WeylElement {
  std::vector<int> word;
  std::vector<std::vector<int>> matrix;
};

/// All positive roots of a connected ADE diagram, sorted.
std::vector<Root> positive_roots(const Diagram& d);

/// The longest element w_0 as a reduced word, built by greedy descent:
/// repeatedly multiply by the smallest-label simple reflection whose
/// simple root is still sent to a positive root.
WeylElement longest_element(const Diagram& d);

/// The opposition involution i -> j with w_0(alpha_i) = -alpha_j.
/// Reducible diagrams are handled componentwise; A_1 components are
/// fixed pointwise.
DiagramMap opposition(const Diagram& d);

/// Nodes whose simple root is not orthogonal to the highest root;
/// equivalently the neighbours of the affine node. Requires a
/// connected ADE diagram. {1,r} for A_r (r >= 2), a single node
/// otherwise.
TypeSet polar_type(const Diagram& d);

}  // namespace projlens
