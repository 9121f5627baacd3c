#include "bealsearch/search.hpp"

#include <algorithm>
#include <tuple>

namespace bealsearch {

namespace {

constexpr unsigned long long kMaxTableEntries = 10'000'000ull;

}  // namespace

void validate(const SearchBounds& bounds) {
  if (bounds.max_base < 1) {
    throw std::invalid_argument("max base must be at least 1");
  }
  if (bounds.max_exponent < 3) {
    throw std::invalid_argument("max exponent must be at least 3");
  }
}

PowerTable build_power_table(const SearchBounds& bounds) {
  validate(bounds);
  unsigned long long entries =
      static_cast<unsigned long long>(bounds.max_base) *
      (bounds.max_exponent - 2);
  if (entries > kMaxTableEntries) {
    throw TableGuardError("power table would exceed 10^7 entries");
  }
  PowerTable table{bounds, {}};
  table.powers.reserve(static_cast<std::size_t>(entries));
  for (unsigned base = 1; base <= bounds.max_base; ++base) {
    Natural value;
    mpz_ui_pow_ui(value.get_mpz_t(), base, 3);
    for (unsigned exp = 3; exp <= bounds.max_exponent; ++exp) {
      table.powers[value].push_back({base, exp});
      value *= base;
    }
  }
  return table;
}

bool solution_less(const Solution& lhs, const Solution& rhs) {
  return std::tie(lhs.a, lhs.b, lhs.c, lhs.x, lhs.y, lhs.z) <
         std::tie(rhs.a, rhs.b, rhs.c, rhs.x, rhs.y, rhs.z);
}

SearchResult search_solutions(const SearchBounds& bounds) {
  PowerTable table = build_power_table(bounds);

  // Flat power list in (base, exponent) order; i <= j pairs cover each
  // unordered {A^x, B^y} exactly once with A <= B (and x <= y when A = B).
  struct Power {
    Natural value;
    unsigned base;
    unsigned exponent;
  };
  std::vector<Power> powers;
  powers.reserve(static_cast<std::size_t>(bounds.max_base) *
                 (bounds.max_exponent - 2));
  for (unsigned base = 1; base <= bounds.max_base; ++base) {
    Natural value;
    mpz_ui_pow_ui(value.get_mpz_t(), base, 3);
    for (unsigned exp = 3; exp <= bounds.max_exponent; ++exp) {
      powers.push_back({value, base, exp});
      value *= base;
    }
  }

  SearchResult result;
  Natural sum;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i; j < powers.size(); ++j) {
      sum = powers[i].value + powers[j].value;
      auto hit = table.powers.find(sum);
      if (hit == table.powers.end()) continue;
      for (const PowerEntry& entry : hit->second) {
        Solution solution{powers[i].base, powers[j].base, entry.base,
                          powers[i].exponent, powers[j].exponent,
                          entry.exponent, std::nullopt};
        solution.common_prime = bealcore::common_prime_factor(
            bealcore::IntValue::from_natural(Natural(solution.a)),
            bealcore::IntValue::from_natural(Natural(solution.b)),
            bealcore::IntValue::from_natural(Natural(solution.c)));
        if (solution.common_prime) {
          result.solutions.push_back(std::move(solution));
        } else {
          result.violations.push_back(std::move(solution));
        }
      }
    }
  }
  std::sort(result.solutions.begin(), result.solutions.end(), solution_less);
  std::sort(result.violations.begin(), result.violations.end(), solution_less);
  return result;
}

}  // namespace bealsearch
