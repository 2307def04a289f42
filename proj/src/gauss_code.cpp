#include "knotforge/gauss_code.hpp"

#include <map>
#include <sstream>

namespace knotforge {

namespace {

void validate(const std::vector<GaussEntry>& entries) {
  if (entries.empty()) throw ParseError("empty Gauss code", -1);
  struct Seen {
    int over = 0, under = 0;
    Sign sign = Sign::plus;
    int first = -1;
  };
  std::map<int, Seen> seen;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (e.label <= 0) throw ParseError("label must be positive", static_cast<int>(i));
    auto& s = seen[e.label];
    if (s.first < 0) {
      s.first = static_cast<int>(i);
      s.sign = e.sign;
    } else if (s.sign != e.sign) {
      throw ParseError("inconsistent signs for label " + std::to_string(e.label),
                       static_cast<int>(i));
    }
    int& count = e.strand == Strand::over ? s.over : s.under;
    if (++count > 1) {
      throw ParseError("label " + std::to_string(e.label) + " has two " +
                           (e.strand == Strand::over ? "over" : "under") + " entries",
                       static_cast<int>(i));
    }
  }
  for (const auto& [label, s] : seen) {
    if (s.over + s.under != 2) {
      throw ParseError("label " + std::to_string(label) + " appears " +
                           std::to_string(s.over + s.under) + " time(s), expected 2",
                       s.first);
    }
  }
}

}  // namespace

SignedGaussCode::SignedGaussCode(std::vector<GaussEntry> entries) : entries_(std::move(entries)) {
  validate(entries_);
}

SignedGaussCode SignedGaussCode::canonical() const {
  std::map<int, int> relabel;
  std::vector<GaussEntry> out = entries_;
  for (auto& e : out) {
    auto [it, inserted] = relabel.try_emplace(e.label, static_cast<int>(relabel.size()) + 1);
    e.label = it->second;
  }
  return SignedGaussCode(std::move(out));
}

SignedGaussCode SignedGaussCode::mirror() const {
  std::vector<GaussEntry> out = entries_;
  for (auto& e : out) e.sign = flip(e.sign);
  return SignedGaussCode(std::move(out));
}

SignedGaussCode parse_gauss(std::string_view text) {
  std::vector<GaussEntry> entries;
  std::istringstream in{std::string(text)};
  std::string tok;
  int index = 0;
  while (in >> tok) {
    auto bad = [&](const std::string& why) {
      return ParseError("token " + std::to_string(index) + " '" + tok + "': " + why, index);
    };
    if (tok.size() < 3) throw bad("expected ([OU])(digits)([+-])");
    GaussEntry e;
    if (tok.front() == 'O') e.strand = Strand::over;
    else if (tok.front() == 'U') e.strand = Strand::under;
    else throw bad("expected 'O' or 'U'");
    if (tok.back() == '+') e.sign = Sign::plus;
    else if (tok.back() == '-') e.sign = Sign::minus;
    else throw bad("expected trailing '+' or '-'");
    const std::string digits = tok.substr(1, tok.size() - 2);
    for (char c : digits) {
      if (c < '0' || c > '9') throw bad("label must be decimal digits");
    }
    if (digits.size() > 9) throw bad("label too large");
    e.label = std::stoi(digits);
    entries.push_back(e);
    ++index;
  }
  return SignedGaussCode(std::move(entries));
}

std::string serialize_gauss(const SignedGaussCode& code) {
  const SignedGaussCode c = code.canonical();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += c[i].strand == Strand::over ? 'O' : 'U';
    out += std::to_string(c[i].label);
    out += c[i].sign == Sign::plus ? '+' : '-';
  }
  return out;
}

}  // namespace knotforge
