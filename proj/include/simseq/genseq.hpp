#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "simseq/props.hpp"

namespace simseq {

class InvalidSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A minimal recursive sequence is fixed by its property, the index of its
/// first term and the first term itself.
struct SequenceSpec {
  PropertyKind kind = PropertyKind::Val2;
  std::uint64_t n0 = 1;
  std::uint64_t seed = 1;

  bool operator==(const SequenceSpec&) const = default;
};

inline SequenceSpec make_spec(PropertyKind kind, std::uint64_t seed) {
  return {kind, min_index(kind), seed};
}

/// Throws InvalidSpec naming both labels when the seed is not similar to n0.
inline void validate(const SequenceSpec& spec) {
  if (spec.n0 < min_index(spec.kind)) {
    throw InvalidSpec("start index " + std::to_string(spec.n0) +
                      " is outside the domain of property " +
                      std::string(to_string(spec.kind)));
  }
  if (spec.seed < spec.n0) {
    throw InvalidSpec("seed " + std::to_string(spec.seed) +
                      " is smaller than start index " +
                      std::to_string(spec.n0));
  }
  const Label ls = label(spec.kind, spec.seed);
  const Label ln = label(spec.kind, spec.n0);
  if (ls != ln) {
    throw InvalidSpec("seed " + std::to_string(spec.seed) + " has label " +
                      std::to_string(ls.value) + " but start index " +
                      std::to_string(spec.n0) + " has label " +
                      std::to_string(ln.value) + " under property " +
                      std::string(to_string(spec.kind)));
  }
}

/// Terms x_{n0}, x_{n0+1}, ... of a run; terms[i] belongs to index n0 + i.
struct SequenceRun {
  SequenceSpec spec;
  std::vector<std::uint64_t> terms;

  std::uint64_t index_of(std::size_t i) const { return spec.n0 + i; }
};

namespace detail {

/// Smallest odd multiple of 2^e exceeding prev.
inline std::uint64_t next_with_val2(std::uint64_t prev, unsigned e) {
  if (e >= 64) throw CapacityError("step: no 64-bit value with that valuation");
  std::uint64_t q = (prev >> e) + 1;
  q |= 1;
  if (q > (std::numeric_limits<std::uint64_t>::max() >> e)) {
    throw CapacityError("step: next term exceeds 64 bits");
  }
  return q << e;
}

}  // namespace detail

/// Linear scan for the smallest y > prev similar to n. Reference path for
/// every property; step() uses it for all but Val2.
inline std::uint64_t step_scan(PropertyKind kind, std::uint64_t n,
                               std::uint64_t prev) {
  const Label target = label(kind, n);
  for (std::uint64_t y = prev + 1;; ++y) {
    if (y == 0) throw CapacityError("step: next term exceeds 64 bits");
    if (label(kind, y) == target) return y;
  }
}

inline std::uint64_t step(PropertyKind kind, std::uint64_t n,
                          std::uint64_t prev) {
  if (prev == 0) throw DomainError("step: previous term must be positive");
  switch (kind) {
    case PropertyKind::Val2:
      return detail::next_with_val2(prev, val2(n).value);
    case PropertyKind::BitParity: {
      if (n == 0) throw DomainError("tm_parity: argument must be positive");
      const unsigned target = tm_bit(n);
      // Any 4 consecutive integers contain both parities, so at most 3 tries.
      for (std::uint64_t y = prev + 1;; ++y) {
        if (y == 0) throw CapacityError("step: next term exceeds 64 bits");
        if (tm_bit(y) == target) return y;
      }
    }
    default:
      return step_scan(kind, n, prev);
  }
}

/// Incremental generator: holds the current index and term.
class Cursor {
 public:
  explicit Cursor(const SequenceSpec& spec)
      : kind_(spec.kind), n_(spec.n0), value_(spec.seed) {}

  std::uint64_t index() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return value_; }

  void advance() {
    value_ = step(kind_, n_ + 1, value_);
    ++n_;
  }

  /// Advances until index() == n (no-op if already there or past).
  void advance_to(std::uint64_t n) {
    while (n_ < n) advance();
  }

 private:
  PropertyKind kind_;
  std::uint64_t n_;
  std::uint64_t value_;
};

inline SequenceRun generate(const SequenceSpec& spec, std::size_t count) {
  validate(spec);
  SequenceRun run{spec, {}};
  run.terms.reserve(count);
  Cursor c(spec);
  for (std::size_t i = 0; i < count; ++i) {
    if (i) c.advance();
    run.terms.push_back(c.value());
  }
  return run;
}

/// n-th sum of distinct powers of 4 (1-indexed): the bits of n read in base 4.
inline std::uint64_t moser_de_bruijn(std::uint64_t n) {
  if (n == 0) throw DomainError("moser_de_bruijn: index must be positive");
  if (n >> 32) throw CapacityError("moser_de_bruijn: value exceeds 64 bits");
  std::uint64_t x = n;
  x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
  x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
  x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
  x = (x | (x << 2)) & 0x3333333333333333ull;
  x = (x | (x << 1)) & 0x5555555555555555ull;
  return x;
}

enum class RunViolation { None, NotIncreasing, NotSimilar, NotMinimal };

struct RunCheck {
  RunViolation violation = RunViolation::None;
  std::optional<std::size_t> first_bad;  // position in terms
  /// For NotMinimal: the skipped value that should have been chosen.
  std::optional<std::uint64_t> witness;

  bool ok() const { return violation == RunViolation::None; }
};

/// Brute-force re-check of the run invariants, scanning every gap value.
/// Reports the earliest position at which any invariant breaks.
inline RunCheck verify_similar_run(const SequenceRun& run) {
  const auto kind = run.spec.kind;
  for (std::size_t i = 0; i < run.terms.size(); ++i) {
    const std::uint64_t n = run.index_of(i);
    const std::uint64_t x = run.terms[i];
    if (i > 0 && x <= run.terms[i - 1]) {
      return {RunViolation::NotIncreasing, i, std::nullopt};
    }
    if (x == 0 || !similar(kind, x, n)) {
      return {RunViolation::NotSimilar, i, std::nullopt};
    }
    if (i > 0) {
      for (std::uint64_t y = run.terms[i - 1] + 1; y < x; ++y) {
        if (similar(kind, y, n)) return {RunViolation::NotMinimal, i, y};
      }
    }
  }
  return {};
}

}  // namespace simseq
