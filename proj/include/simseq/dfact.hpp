#pragma once

#include <bit>
#include <cstdint>
#include <optional>

#include "simseq/parallel.hpp"
#include "simseq/props.hpp"

namespace simseq {

// All products below are taken modulo 2^64 via unsigned wrap-around. Adding a
// sign of +-1 to an odd residue and reading its trailing zeros recovers the
// exact 2-adic valuation as long as that valuation is below 64.

/// Sign (-1)^((n-1)(n-2)/2): +1 for n = 1, 2 (mod 4), -1 for n = 3, 0 (mod 4).
constexpr int eps(std::uint64_t n) {
  if (n == 0) throw DomainError("eps: n must be positive");
  const auto r = n % 4;
  return (r == 1 || r == 2) ? 1 : -1;
}

constexpr std::uint64_t pow_wrap(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// (1 * 3 * 5 * ... * (2n-1))^x mod 2^64.
constexpr std::uint64_t odd_dfact_mod(std::uint64_t n, std::uint64_t x = 1) {
  if (n == 0) throw DomainError("odd_dfact_mod: n must be positive");
  if (x % 2 == 0) throw DomainError("odd_dfact_mod: exponent must be odd");
  std::uint64_t acc = 1;
  for (std::uint64_t k = 1; k <= n; ++k) acc *= 2 * k - 1;
  return pow_wrap(acc, x);
}

/// ((2n-1)!! + eps(n)) / 2 computed exactly; n <= 17 fits in 64 bits.
inline std::uint64_t seq3_term(std::uint64_t n) {
  if (n == 0) throw DomainError("seq3_term: n must be positive");
  std::uint64_t acc = 1;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (__builtin_mul_overflow(acc, 2 * k - 1, &acc)) {
      throw CapacityError("seq3_term: (2n-1)!! exceeds 64 bits");
    }
  }
  return eps(n) > 0 ? acc / 2 + 1 : acc / 2;
}

struct DoubleFactorialProbe {
  std::uint64_t n = 1;
  std::uint64_t x = 1;
  int sign = 1;
  std::uint64_t residue = 1;
  /// Empty when residue + sign wraps to 0, i.e. the valuation is >= 64.
  std::optional<unsigned> v;

  bool window_exceeded() const { return !v.has_value(); }
};

constexpr std::optional<unsigned> val2_shifted(std::uint64_t residue,
                                               int sign) {
  const std::uint64_t s = residue + static_cast<std::uint64_t>(
                                        static_cast<std::int64_t>(sign));
  if (s == 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(s));
}

constexpr DoubleFactorialProbe probe_from_residue(std::uint64_t n,
                                                  std::uint64_t x,
                                                  std::uint64_t residue) {
  const int sign = eps(n);
  return {n, x, sign, residue, val2_shifted(residue, sign)};
}

constexpr DoubleFactorialProbe probe(std::uint64_t n, std::uint64_t x = 1) {
  return probe_from_residue(n, x, odd_dfact_mod(n, x));
}

/// The valuation of (2n-1)!!^x + eps(n) equals val2(2n). A valuation >= 64
/// is reported false: val2(2n) <= 63 for every representable n.
constexpr bool probe_matches(const DoubleFactorialProbe& p) {
  return p.v && *p.v == val2(2 * p.n).value;
}

constexpr bool theorem1_check(std::uint64_t n) { return probe_matches(probe(n)); }

constexpr bool corollary1_check(std::uint64_t n, std::uint64_t x) {
  if (x % 2 == 0) throw DomainError("corollary1_check: exponent must be odd");
  return probe_matches(probe(n, x));
}

struct DfactSweep {
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_failure;
  bool window_exceeded = false;

  bool passed() const { return !first_failure.has_value(); }
  bool operator==(const DfactSweep&) const = default;
};

/// Checks n = 1..n_max for exponent x sharing one running product. Chunks
/// each rebuild their own starting product, so workers only split the range.
inline DfactSweep dfact_sweep(std::uint64_t n_max, std::uint64_t x = 1,
                              unsigned workers = 1) {
  if (x % 2 == 0) throw DomainError("dfact_sweep: exponent must be odd");
  return parallel_reduce<DfactSweep>(
      1, n_max + 1, workers, DfactSweep{},
      [x](std::uint64_t lo, std::uint64_t hi) {
        DfactSweep out;
        std::uint64_t acc = odd_dfact_mod(lo, 1);
        for (std::uint64_t n = lo; n < hi; ++n) {
          if (n != lo) acc *= 2 * n - 1;
          const auto p = probe_from_residue(n, x, pow_wrap(acc, x));
          ++out.checked;
          if (!probe_matches(p)) {
            out.first_failure = n;
            out.window_exceeded = p.window_exceeded();
            break;
          }
        }
        return out;
      },
      [](DfactSweep a, DfactSweep b) {
        if (a.first_failure) return a;
        b.checked += a.checked;
        return b;
      },
      16);
}

}  // namespace simseq
