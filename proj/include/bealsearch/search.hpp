#pragma once

#include "bealcore/factor.hpp"
#include "bealcore/int_value.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace bealsearch {

using bealcore::Natural;

struct SearchBounds {
  unsigned max_base;      // N >= 1
  unsigned max_exponent;  // K >= 3; exponents run from 3 to K
};

// std::invalid_argument when out of range.
void validate(const SearchBounds& bounds);

struct PowerEntry {
  unsigned base;
  unsigned exponent;
};

class TableGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NaturalHash {
  std::size_t operator()(const Natural& n) const {
    // Residue mod a large prime mixes enough for bucket spread.
    std::size_t h = mpz_fdiv_ui(n.get_mpz_t(), 0xffffffffffc5ull);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
  }
};

// value -> every (base, exponent) in range producing it, sorted by (base,
// exponent). Refuses via TableGuardError past 10^7 entries.
struct PowerTable {
  SearchBounds bounds;
  std::unordered_map<Natural, std::vector<PowerEntry>, NaturalHash> powers;
};

PowerTable build_power_table(const SearchBounds& bounds);

struct Solution {
  unsigned a, b, c;
  unsigned x, y, z;
  std::optional<Natural> common_prime;  // absent = conjecture violation
};

// (A, B, C, x, y, z) ordering.
bool solution_less(const Solution& lhs, const Solution& rhs);

struct SearchResult {
  std::vector<Solution> solutions;   // common prime present
  std::vector<Solution> violations;  // none shared — expected to stay empty
};

// Probes every A^x + B^y with A <= B (and x <= y when A = B) against the
// power table and records each hit with the smallest common prime factor of
// (A, B, C). Output is sorted lexicographically by (A, B, C, x, y, z).
SearchResult search_solutions(const SearchBounds& bounds);

}  // namespace bealsearch
