#include "hyperramsey/random.hpp"

#include <algorithm>

#include "hyperramsey/errors.hpp"

namespace hr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Vertex> sample_subset(std::mt19937_64& rng, std::uint64_t universe, std::size_t k) {
  if (k > universe) throw DomainError("cannot sample more vertices than the universe holds");
  std::vector<Vertex> out;
  out.reserve(k);
  for (std::uint64_t j = universe - k; j < universe; ++j) {
    const Vertex v = uniform_below(rng, j + 1);
    if (std::find(out.begin(), out.end(), v) == out.end())
      out.push_back(v);
    else
      out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hr
