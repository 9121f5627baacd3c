#pragma once

#include "bealcore/adjudicate.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bealcore {

// One claim per line: A B C x y z, optionally followed by a policy name.
// Bases are decimal naturals or the zero spellings "+0", "-0", "0" — a bare
// "0" is the unsigned zero. '#' starts a comment; blank lines are skipped.
struct ClaimRecord {
  BealClaim claim;
  std::optional<PositiveIntegerPolicy> policy;
  int line = 0;
};

class ClaimParseError : public std::runtime_error {
 public:
  ClaimParseError(int line, const std::string& field, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": field " + field +
                           ": " + what),
        line_(line),
        field_(field) {}

  int line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  int line_;
  std::string field_;
};

std::vector<ClaimRecord> parse_claims(std::istream& in);

}  // namespace bealcore
