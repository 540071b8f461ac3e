#ifndef OVOID_WEIGHT_DISTRIBUTION_HPP
#define OVOID_WEIGHT_DISTRIBUTION_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

namespace ovoid {

/// Hamming weight -> number of codewords; zero multiplicities are not stored.
struct WeightDistribution
{
  std::size_t length = 0;
  std::map<std::size_t, mpz_class> counts;

  void add(std::size_t weight, const mpz_class& multiplicity)
  {
    if (multiplicity == 0)
      return;
    counts[weight] += multiplicity;
  }

  mpz_class at(std::size_t weight) const
  {
    const auto it = counts.find(weight);
    return it == counts.end() ? mpz_class(0) : it->second;
  }

  mpz_class total() const
  {
    mpz_class t = 0;
    for (const auto& [w, m] : counts)
      t += m;
    return t;
  }

  std::optional<std::size_t> min_nonzero_weight() const
  {
    for (const auto& [w, m] : counts)
      if (w > 0)
        return w;
    return std::nullopt;
  }

  friend bool operator==(const WeightDistribution& a, const WeightDistribution& b)
  {
    return a.length == b.length && a.counts == b.counts;
  }

  /// "(0^1 2^36 4^126 ...)"
  std::string table_notation() const
  {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& [w, m] : counts) {
      if (!first)
        os << ' ';
      os << w << '^' << m.get_str();
      first = false;
    }
    os << ')';
    return os.str();
  }

  /// {"weight": "multiplicity"} with decimal-string multiplicities.
  nlohmann::json to_json() const
  {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [w, m] : counts)
      j[std::to_string(w)] = m.get_str();
    return j;
  }

  static WeightDistribution from_json(std::size_t length, const nlohmann::json& j)
  {
    WeightDistribution d;
    d.length = length;
    for (const auto& [key, value] : j.items())
      d.add(std::stoul(key), mpz_class(value.get<std::string>()));
    return d;
  }
};

} // namespace ovoid

#endif
