#include "bealcore/claim_io.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace bealcore {

namespace {

unsigned long parse_exponent(int line, const std::string& field,
                             const std::string& text) {
  if (text.empty()) throw ClaimParseError(line, field, "missing value");
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ClaimParseError(line, field, "invalid natural '" + text + "'");
    }
  }
  try {
    unsigned long value = std::stoul(text);
    if (value < 1) throw ClaimParseError(line, field, "exponent must be >= 1");
    return value;
  } catch (const std::out_of_range&) {
    throw ClaimParseError(line, field, "exponent '" + text + "' out of range");
  }
}

IntValue parse_base(int line, const std::string& field, const std::string& text) {
  try {
    return parse_int_value(text);
  } catch (const std::invalid_argument& e) {
    throw ClaimParseError(line, field, e.what());
  }
}

}  // namespace

std::vector<ClaimRecord> parse_claims(std::istream& in) {
  std::vector<ClaimRecord> records;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    std::string a, b, c, x, y, z;
    if (!(fields >> a)) continue;  // blank or comment-only line
    if (!(fields >> b >> c >> x >> y >> z)) {
      throw ClaimParseError(line_no, "record",
                            "expected at least 6 fields: A B C x y z [policy]");
    }
    ClaimRecord record;
    record.line = line_no;
    IntValue base_a = parse_base(line_no, "A", a);
    IntValue base_b = parse_base(line_no, "B", b);
    IntValue base_c = parse_base(line_no, "C", c);
    record.claim = make_claim(std::move(base_a), std::move(base_b),
                              std::move(base_c), parse_exponent(line_no, "x", x),
                              parse_exponent(line_no, "y", y),
                              parse_exponent(line_no, "z", z));
    std::string policy_name, extra;
    if (fields >> policy_name) {
      auto policy = parse_policy(policy_name);
      if (!policy) {
        throw ClaimParseError(line_no, "policy",
                              "unknown policy '" + policy_name + "'");
      }
      record.policy = *policy;
      if (fields >> extra) {
        throw ClaimParseError(line_no, "record", "trailing field '" + extra + "'");
      }
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace bealcore
