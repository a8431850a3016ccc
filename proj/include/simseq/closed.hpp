#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "simseq/parallel.hpp"
#include "simseq/props.hpp"

namespace simseq {

/// Outcome of a batch identity check over an index interval.
struct ClosedFormReport {
  std::string name;
  std::uint64_t first = 1;
  std::uint64_t last = 0;
  std::optional<std::uint64_t> first_mismatch;

  bool passed() const { return !first_mismatch.has_value(); }
  bool operator==(const ClosedFormReport&) const = default;
};

namespace detail {

inline std::uint64_t checked_twice(std::uint64_t v, std::uint64_t add) {
  if (v > (UINT64_MAX - add) / 2) throw CapacityError("value exceeds 64 bits");
  return 2 * v + add;
}

}  // namespace detail

/// Canonical A1 sequence with seed 3 via the halving recursion
///   x(1) = 3, x(2) = 6, x(2m-1) = 2 x(m-1) + 1, x(2m) = 2 x(m).
inline std::uint64_t x3_recursive(std::uint64_t n) {
  if (n == 0) throw DomainError("x3_recursive: index must be positive");
  if (n == 1) return 3;
  if (n == 2) return 6;
  if (n & 1) return detail::checked_twice(x3_recursive((n - 1) / 2), 1);
  return detail::checked_twice(x3_recursive(n / 2), 0);
}

/// Survivor of the every-second-person elimination: n = 2^m + L gives 2L + 1.
constexpr std::uint64_t josephus(std::uint64_t n) {
  if (n == 0) throw DomainError("josephus: n must be positive");
  const std::uint64_t top = std::bit_floor(n);
  return 2 * (n - top) + 1;
}

constexpr std::uint64_t x3_via_josephus(std::uint64_t n) {
  return 3 * n + 1 - josephus(n);
}

/// Numbers whose binary expansion does not begin with "10", by the recursion
/// a(0) = 0, a(1) = 1, a(2m) = 2 a(m) + 1, a(2m+1) = 2 a(m+1).
inline std::uint64_t a004760(std::uint64_t n) {
  if (n <= 1) return n;
  if (n & 1) return detail::checked_twice(a004760(n / 2 + 1), 0);
  return detail::checked_twice(a004760(n / 2), 1);
}

/// Canonical A2 sequence with seed 4: 2n+3 when n * val2(n+1) is even,
/// otherwise 2n+2.
constexpr std::uint64_t x4_closed(std::uint64_t n) {
  if (n == 0) throw DomainError("x4_closed: index must be positive");
  const bool even_product = (n % 2 == 0) || (val2(n + 1).value % 2 == 0);
  return 2 * n + (even_product ? 3 : 2);
}

/// True when the binary expansion of v starts with "11".
constexpr bool starts_with_11(std::uint64_t v) {
  return v >= 3 && ((v >> (std::bit_width(v) - 2)) & 1);
}

/// Runs pred over [first, last] in parallel chunks and keeps the smallest
/// failing index.
inline ClosedFormReport check_range(std::string name, std::uint64_t first,
                                    std::uint64_t last,
                                    const std::function<bool(std::uint64_t)>& pred,
                                    unsigned workers = 1) {
  ClosedFormReport rep{std::move(name), first, last, std::nullopt};
  if (last < first) return rep;
  rep.first_mismatch = parallel_reduce<std::optional<std::uint64_t>>(
      first, last + 1, workers, std::nullopt,
      [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<std::uint64_t> {
        for (std::uint64_t n = lo; n < hi; ++n) {
          if (!pred(n)) return n;
        }
        return std::nullopt;
      },
      [](std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
        return a ? a : b;
      });
  return rep;
}

inline ClosedFormReport check_corollary2(std::uint64_t limit,
                                         unsigned workers = 1) {
  return check_range("x3 binary prefix 11", 1, limit,
                     [](std::uint64_t n) { return starts_with_11(x3_recursive(n)); },
                     workers);
}

/// For n = 1 (mod 4): x4(n) = 4 (mod 8) and x4(n+8) - x4(n) = 16.
inline ClosedFormReport check_corollary4(std::uint64_t limit,
                                         unsigned workers = 1) {
  if (limit < 9) throw DomainError("check_corollary4: limit must be >= 9");
  return check_range(
      "x4 mod 8 and +16 over 8 steps", 1, limit,
      [](std::uint64_t n) {
        if (n % 4 != 1) return true;
        const auto v = x4_closed(n);
        return v % 8 == 4 && x4_closed(n + 8) - v == 16;
      },
      workers);
}

inline ClosedFormReport check_lemma1(unsigned t_max) {
  return check_range("x3(2^t) = 3 * 2^t", 0, t_max, [](std::uint64_t t) {
    return x3_recursive(std::uint64_t{1} << t) == 3 * (std::uint64_t{1} << t);
  });
}

/// x3 recursion = 3n + 1 - josephus(n) = a004760(n + 1).
inline ClosedFormReport check_eq25(std::uint64_t limit, unsigned workers = 1) {
  return check_range(
      "x3 = 3n+1-josephus(n) = a004760(n+1)", 1, limit,
      [](std::uint64_t n) {
        const auto x = x3_recursive(n);
        return x == x3_via_josephus(n) && x == a004760(n + 1);
      },
      workers);
}

}  // namespace simseq
