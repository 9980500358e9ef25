#include "tropmod/weight_data.hpp"

#include <sstream>

namespace tropmod {

std::string weight_data_error(int g, const std::vector<Rational>& weights) {
  if (g < 0) return "genus must be nonnegative";
  for (size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() <= 0 || weights[i] > Rational(1))
      return "weight a_" + std::to_string(i + 1) + " = " + weights[i].str() +
             " is outside (0,1]";
  }
  Rational total(2 * g - 2);
  for (const auto& w : weights) total += w;
  if (total.sign() <= 0) return "2g-2 + sum(weights) must be positive";
  return {};
}

WeightData WeightData::make(int g, std::vector<Rational> weights) {
  if (auto err = weight_data_error(g, weights); !err.empty())
    throw ValidationError("invalid weight datum: " + err);
  return WeightData{g, std::move(weights)};
}

WeightData WeightData::parse(int g, const std::string& weight_list) {
  std::vector<Rational> ws;
  std::string item;
  std::istringstream in(weight_list);
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ValidationError("empty weight in list '" + weight_list + "'");
    ws.push_back(Rational::parse(item));
  }
  return make(g, std::move(ws));
}

Rational WeightData::total_weight() const {
  Rational total(0);
  for (const auto& w : weights) total += w;
  return total;
}

bool WeightData::dominates(const WeightData& b) const {
  if (b.weights.size() != weights.size()) return false;
  for (size_t i = 0; i < weights.size(); ++i)
    if (b.weights[i] > weights[i]) return false;
  return true;
}

bool WeightData::is_classical() const {
  for (const auto& w : weights)
    if (w != Rational(1)) return false;
  return true;
}

std::string WeightData::str() const {
  std::string out = "(" + std::to_string(g) + ";";
  for (size_t i = 0; i < weights.size(); ++i)
    out += (i ? "," : " ") + weights[i].str();
  out += ")";
  return out;
}

}  // namespace tropmod
