#pragma once

// Deterministic random fixtures: near-regular simple graphs via stub pairing.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "keep3/graph.hpp"

namespace keep3 {

// Uniform draw from [0, bound) by rejection; avoids distribution classes so
// identical seeds give identical streams on every platform.
std::uint32_t rng_below(std::mt19937& rng, std::uint32_t bound);

// Fisher–Yates driven by rng_below, same portability guarantee.
void shuffle_ints(std::vector<int>& values, std::mt19937& rng);

// A simple graph whose every degree lies in [deg_lo, deg_hi]: degrees are
// drawn per vertex, stubs paired at random, and the attempt is retried when
// the pairing creates a loop or a parallel edge. Empty after max_tries
// failed attempts. Connectivity is the caller's filter to apply.
std::optional<Graph> random_near_regular(int n, int deg_lo, int deg_hi, std::mt19937& rng,
                                         int max_tries = 200);

}  // namespace keep3
