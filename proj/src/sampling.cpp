#include "lieorb/sampling.hpp"

namespace lieorb {

namespace {
std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t mix64(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane) {
  return splitmix(splitmix(splitmix(seed) ^ sample) ^ (lane * 0xd1342543de82ef95ULL + 1));
}

long sample_int(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane, long lo, long hi) {
  const auto width = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(mix64(seed, sample, lane) % width);
}

Rat sample_rat(std::uint64_t seed, std::uint64_t sample, std::uint64_t lane, long bound) {
  const long p = sample_int(seed, sample, 2 * lane, -bound, bound);
  const long q = sample_int(seed, sample, 2 * lane + 1, 1, bound);
  return Rat(p, q);
}

Covector sample_covector(std::uint64_t seed, std::uint64_t sample, std::size_t dim, long bound) {
  Vec c(dim);
  for (std::size_t i = 0; i < dim; ++i) c[i] = sample_rat(seed, sample, i, bound);
  return Covector(dim, std::move(c));
}

std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
  return splitmix(splitmix(seed ^ 0xa0761d6478bd642fULL) + tag);
}

}  // namespace lieorb
