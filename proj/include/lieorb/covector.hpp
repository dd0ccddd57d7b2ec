#pragma once

#include <cstddef>

#include "lieorb/rational.hpp"

namespace lieorb {

/// Element of the dual of a coordinate space, stored in the dual basis.
struct Covector {
  std::size_t space_dim = 0;
  Vec coords;

  Covector() = default;
  Covector(std::size_t dim, Vec c) : space_dim(dim), coords(std::move(c)) {}
  static Covector zero(std::size_t dim) { return Covector(dim, Vec(dim)); }

  Rat operator()(const Vec& v) const { return dot(coords, v); }
  bool is_zero() const { return lieorb::is_zero(coords); }

  bool operator==(const Covector& o) const {
    return space_dim == o.space_dim && coords == o.coords;
  }
  bool operator!=(const Covector& o) const { return !(*this == o); }
};

}  // namespace lieorb
