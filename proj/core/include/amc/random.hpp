#pragma once

#include <amc/types.hpp>

#include <cstdint>
#include <random>
#include <span>

namespace amc {

/// SplitMix64 finalizer. Used to expand one master seed into independent
/// stream seeds: `derive_seed(master, k)` for stream k.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9E3779B97F4A7C15ULL;
	x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
	x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
	return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
	return splitmix64(master ^ splitmix64(stream + 0x5851F42D4C957F2DULL));
}

/// Engine used everywhere in the library.
using Rng = std::mt19937_64;

/// `count` distinct elements of `pool` drawn uniformly without replacement
/// (partial Fisher-Yates), returned in ascending order.
IndexList sample_without_replacement(std::span<const Index> pool, Index count, Rng& rng);

} // namespace amc
