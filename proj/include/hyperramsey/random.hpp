#pragma once

// Seeded random streams. Every sample is a pure function of (seed, index):
// streams are derived with splitmix64 and drawn from std::mt19937_64, whose
// output sequence is fixed by the standard. Bounded draws use rejection so
// results do not depend on the standard library's distributions.

#include <cstdint>
#include <random>
#include <vector>

#include "hyperramsey/combinatorics.hpp"

namespace hr {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent engine for stream `index` under `seed`.
std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, bound); bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng);

/// Uniform k-subset of {0..universe-1}, sorted ascending (Floyd's method).
std::vector<Vertex> sample_subset(std::mt19937_64& rng, std::uint64_t universe, std::size_t k);

}  // namespace hr
