#include "support/sampling.hpp"

#include "tropmod/chambers.hpp"

namespace sampling {

using tropmod::ExtRational;
using tropmod::Rational;
using tropmod::WeightData;

WeightData random_weights(int g, int n, Rng& rng, int max_denominator) {
  std::uniform_int_distribution<int> den_dist(1, max_denominator);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Rational> weights;
    for (int i = 0; i < n; ++i) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(1, den);
      weights.emplace_back(num_dist(rng), den);
    }
    if (tropmod::weight_data_error(g, weights).empty())
      return WeightData::make(g, std::move(weights));
  }
  throw std::runtime_error("could not sample a valid weight datum");
}

WeightData random_dominated(const WeightData& a, Rng& rng) {
  std::uniform_int_distribution<int> den_dist(1, 6);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Rational> weights;
    for (const auto& upper : a.weights) {
      int den = den_dist(rng);
      std::uniform_int_distribution<int> num_dist(1, den);
      weights.push_back(upper * Rational(num_dist(rng), den));
    }
    if (tropmod::weight_data_error(a.g, weights).empty())
      return WeightData::make(a.g, std::move(weights));
  }
  throw std::runtime_error("could not sample a dominated weight datum");
}

WeightData random_off_wall(int g, int n, Rng& rng) {
  tropmod::WallSet wall_set = tropmod::walls(g, n, tropmod::WallKind::Fine);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    WeightData a = random_weights(g, n, rng);
    try {
      tropmod::chamber_signature(a, wall_set);
      return a;
    } catch (const tropmod::OnWallError&) {
    }
  }
  throw std::runtime_error("could not sample an off-wall weight datum");
}

ExtRational random_length(Rng& rng, bool allow_infinite) {
  if (allow_infinite) {
    std::uniform_int_distribution<int> coin(0, 3);
    if (coin(rng) == 0) return ExtRational::infinity();
  }
  std::uniform_int_distribution<int> num_dist(1, 24);
  std::uniform_int_distribution<int> den_dist(1, 8);
  return ExtRational(Rational(num_dist(rng), den_dist(rng)));
}

std::vector<ExtRational> random_lengths(int count, Rng& rng, bool allow_infinite) {
  std::vector<ExtRational> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_length(rng, allow_infinite));
  return out;
}

}  // namespace sampling
