#pragma once

// Deterministic random generators for property tests: exact rational weight
// vectors with bounded denominators, dominated weight chains, and edge
// lengths. Everything is seeded explicitly so failures reproduce.

#include <random>
#include <vector>

#include "tropmod/cone_complex.hpp"
#include "tropmod/weight_data.hpp"

namespace sampling {

using Rng = std::mt19937_64;

// A valid datum with weights p/q, q <= max_denominator.
tropmod::WeightData random_weights(int g, int n, Rng& rng, int max_denominator = 10);

// A valid datum dominated by `a` componentwise.
tropmod::WeightData random_dominated(const tropmod::WeightData& a, Rng& rng);

// A valid datum off every wall of the given wall set (rejection sampling).
tropmod::WeightData random_off_wall(int g, int n, Rng& rng);

// Strictly positive rational length; with `allow_infinite`, returns infinity
// roughly one time in four.
tropmod::ExtRational random_length(Rng& rng, bool allow_infinite);

std::vector<tropmod::ExtRational> random_lengths(int count, Rng& rng,
                                                 bool allow_infinite);

}  // namespace sampling
