#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotforge {

enum class Strand { over, under };
enum class Sign { plus, minus };

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline Strand other(Strand s) { return s == Strand::over ? Strand::under : Strand::over; }

struct GaussEntry {
  int label = 0;  // positive
  Strand strand = Strand::over;
  Sign sign = Sign::plus;

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

// Signed Gauss code of an oriented knot diagram: one entry per passage through
// a crossing, in traversal order. Every label appears exactly twice, once over
// and once under, both entries carrying the crossing sign.
class SignedGaussCode {
 public:
  SignedGaussCode() = default;
  // Validates the invariants and throws ParseError (token index = -1) on failure.
  explicit SignedGaussCode(std::vector<GaussEntry> entries);

  const std::vector<GaussEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t crossing_count() const { return entries_.size() / 2; }
  const GaussEntry& operator[](std::size_t i) const { return entries_[i]; }

  // Labels renumbered 1, 2, ... in order of first appearance.
  SignedGaussCode canonical() const;
  SignedGaussCode mirror() const;

  friend bool operator==(const SignedGaussCode&, const SignedGaussCode&) = default;

 private:
  std::vector<GaussEntry> entries_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int token) : std::runtime_error(what), token_(token) {}
  // Zero-based index of the offending token, or -1 for whole-code violations.
  int token() const { return token_; }

 private:
  int token_;
};

// Grammar: whitespace-separated tokens ([OU])(\d+)([+-]).
SignedGaussCode parse_gauss(std::string_view text);
std::string serialize_gauss(const SignedGaussCode& code);

}  // namespace knotforge
