#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simseq/genseq.hpp"

namespace simseq::io {

enum class OutputFormat { Plain, Csv, Bfile };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "plain") return OutputFormat::Plain;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "bfile") return OutputFormat::Bfile;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

/// plain: values separated by single spaces on one line.
/// csv:   "n,value" header then one row per term.
/// bfile: "n value" per line, indices starting at the run's first index.
inline void write_run(std::ostream& os, const SequenceRun& run,
                      OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Plain:
      for (std::size_t i = 0; i < run.terms.size(); ++i) {
        if (i) os << ' ';
        os << run.terms[i];
      }
      os << '\n';
      break;
    case OutputFormat::Csv:
      os << "n,value\n";
      for (std::size_t i = 0; i < run.terms.size(); ++i) {
        os << run.index_of(i) << ',' << run.terms[i] << '\n';
      }
      break;
    case OutputFormat::Bfile:
      for (std::size_t i = 0; i < run.terms.size(); ++i) {
        os << run.index_of(i) << ' ' << run.terms[i] << '\n';
      }
      break;
  }
}

struct BfileEntry {
  std::uint64_t n = 0;
  std::uint64_t value = 0;
  bool operator==(const BfileEntry&) const = default;
};

class BfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool parse_u64(std::string_view s, std::uint64_t& out) {
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && p == end;
}

}  // namespace detail

/// Reads "n value" lines. Blank lines and lines starting with '#' are skipped.
/// Negative values are rejected: every sequence here is positive.
inline std::vector<BfileEntry> read_bfile(std::istream& is) {
  std::vector<BfileEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto sp = t.find_first_of(" \t");
    BfileEntry e;
    if (sp == std::string_view::npos ||
        !detail::parse_u64(t.substr(0, sp), e.n) ||
        !detail::parse_u64(detail::trim(t.substr(sp)), e.value)) {
      throw BfileError("b-file line " + std::to_string(lineno) +
                       ": expected 'n value', got '" + std::string(t) + "'");
    }
    out.push_back(e);
  }
  return out;
}

struct BfileDiff {
  std::size_t compared = 0;
  std::size_t outside = 0;  // entries whose index the run does not cover
  std::optional<BfileEntry> expected;  // first mismatching external entry
  std::uint64_t got = 0;

  bool matches() const { return !expected.has_value(); }
};

inline BfileDiff diff_bfile(const SequenceRun& run,
                            const std::vector<BfileEntry>& external) {
  BfileDiff d;
  for (const auto& e : external) {
    if (e.n < run.spec.n0 || e.n - run.spec.n0 >= run.terms.size()) {
      ++d.outside;
      continue;
    }
    ++d.compared;
    const auto got = run.terms[e.n - run.spec.n0];
    if (got != e.value && !d.expected) {
      d.expected = e;
      d.got = got;
    }
  }
  return d;
}

}  // namespace simseq::io
