#pragma once

#include <lincolor/hypergraph/linear_hypergraph.hpp>

#include <string_view>

namespace lincolor::presets {

/// Three-term arithmetic progressions x0 - 2 x1 + x2 = 0 on Q^dim.
inline LinearHypergraph ap(std::size_t dim = 1) {
  const auto q = Field::rationals();
  return LinearHypergraph(q, dim, {SlimComponent::scalars(q, dim, 1, -2, 1)});
}

/// Equilateral triangles on Q(w)^dim, w = e^{i pi/3}: x2 - x0 = w (x1 - x0), listed a second
/// time with the roles of x0 and x1 exchanged.
inline LinearHypergraph equilateral(std::size_t dim = 1) {
  const auto k = Field::eisenstein();
  const Scalar w = Scalar::generator(k);
  const Scalar one(k, 1);
  return LinearHypergraph(k, dim,
                          {SlimComponent::scalars(k, dim, one - w, w, -one),
                           SlimComponent::scalars(k, dim, w, one - w, -one)});
}

inline LinearHypergraph by_name(std::string_view name, std::size_t dim = 1) {
  if (name == "ap") return ap(dim);
  if (name == "equilateral") return equilateral(dim);
  throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
}

}  // namespace lincolor::presets
