#pragma once

#include "kecoh/rational.hpp"

#include <initializer_list>
#include <vector>

namespace kecoh {

// A weight/root in the orthonormal coordinates of the relevant Cartan subalgebra,
// with exact rational components.
struct RootVector {
  std::vector<Rational> coords;

  RootVector() = default;
  explicit RootVector(std::vector<Rational> c) : coords(std::move(c)) {}
  RootVector(std::initializer_list<Rational> c) : coords(c) {}

  size_t size() const { return coords.size(); }
  bool empty() const { return coords.empty(); }
  Rational coordinate_sum() const;

  bool operator==(const RootVector& rhs) const { return coords == rhs.coords; }
};

// Euclidean dot product on coordinates. Throws on length mismatch.
Rational pairing(const RootVector& a, const RootVector& b);

}  // namespace kecoh
