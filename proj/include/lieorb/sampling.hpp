#pragma once

#include <cstdint>

#include "lieorb/covector.hpp"

namespace lieorb {

// Counter-based deterministic sampling: every draw is a pure function of
// (seed, sample index, lane), so results do not depend on evaluation order.

/// 64-bit mix of (seed, sample, lane), splitmix-style.
std::uint64_t mix64(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane);

/// Uniform integer in [lo, hi].
long sample_int(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane, long lo, long hi);

/// Rational p/q with |p| <= bound and 1 <= q <= bound.
Rat sample_rat(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane, long bound);

/// Covector with sample_rat coordinates; lane pairs (2i, 2i+1) feed entry i.
Covector sample_covector(std::uint64_t seed, std::uint64_t sample, std::size_t dim, long bound);

/// Domain-separated seed for a named sub-stream.
std::uint64_t substream(std::uint64_t seed, std::uint64_t tag);

}  // namespace lieorb
