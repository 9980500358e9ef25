#pragma once

#include <string>
#include <vector>

#include "tropmod/rational.hpp"

namespace tropmod {

// Input datum (g, A): a genus together with one exact rational weight per
// marked leg. Valid data satisfy 0 < a_i <= 1 for every weight and
// 2g - 2 + a_1 + ... + a_n > 0. n = 0 is allowed when 2g - 2 > 0.
struct WeightData {
  int g = 0;
  std::vector<Rational> weights;

  // Validates and constructs; throws ValidationError on a bad datum.
  static WeightData make(int g, std::vector<Rational> weights);

  // Parses comma-separated "p/q" weights, e.g. "1,1/2,1/2".
  static WeightData parse(int g, const std::string& weight_list);

  int leg_count() const { return static_cast<int>(weights.size()); }
  Rational total_weight() const;

  // True when b_i <= a_i for every i (same arity required).
  bool dominates(const WeightData& b) const;
  bool is_classical() const;  // all weights equal to 1

  bool operator==(const WeightData& o) const { return g == o.g && weights == o.weights; }

  std::string str() const;  // "(g; a1,...,an)"
};

// Validity check without construction; returns the failure reason or empty.
std::string weight_data_error(int g, const std::vector<Rational>& weights);

}  // namespace tropmod
