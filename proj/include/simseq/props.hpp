#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simseq {

/// Raised when an argument lies outside the domain of a classifier.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a result would not fit in 64 bits.
class CapacityError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Equivalence property used to label positive integers.
///   Val2      - exponent of the highest power of two dividing n
///   BitParity - parity of the number of ones in binary n (Thue-Morse)
///   Primality - prime or not prime
///   Omega     - number of distinct prime divisors
enum class PropertyKind { Val2, BitParity, Primality, Omega };

inline constexpr std::array<PropertyKind, 4> kAllKinds = {
    PropertyKind::Val2, PropertyKind::BitParity, PropertyKind::Primality,
    PropertyKind::Omega};

constexpr std::string_view to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::Val2: return "a1";
    case PropertyKind::BitParity: return "a2";
    case PropertyKind::Primality: return "a3";
    case PropertyKind::Omega: return "a4";
  }
  return "?";
}

inline PropertyKind parse_kind(std::string_view s) {
  for (auto k : kAllKinds) {
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown property '" + std::string(s) +
                              "' (expected a1, a2, a3 or a4)");
}

/// Smallest index the property is defined on (Omega excludes 1).
constexpr std::uint64_t min_index(PropertyKind kind) {
  return kind == PropertyKind::Omega ? 2 : 1;
}

/// Equivalence class label. Two integers are similar iff their labels match.
struct Label {
  unsigned value = 0;
  constexpr auto operator<=>(const Label&) const = default;
};

constexpr Label val2(std::uint64_t n) {
  if (n == 0) throw DomainError("val2: argument must be positive");
  return {static_cast<unsigned>(std::countr_zero(n))};
}

/// Thue-Morse parity: 0 for evil numbers, 1 for odious numbers.
constexpr Label tm_parity(std::uint64_t n) {
  if (n == 0) throw DomainError("tm_parity: argument must be positive");
  return {static_cast<unsigned>(std::popcount(n) & 1)};
}

/// Bare Thue-Morse bit with t(0) = 0; used in hot loops where n >= 1 is known.
constexpr unsigned tm_bit(std::uint64_t n) noexcept {
  return static_cast<unsigned>(std::popcount(n) & 1);
}

namespace detail {

inline constexpr std::uint64_t kSieveLimit = std::uint64_t{1} << 26;

/// Odd-only Eratosthenes bitset for n < kSieveLimit. Built once, read-only
/// afterwards; function-local static initialisation makes it safe to share.
class OddSieve {
 public:
  OddSieve() : bits_(kSieveLimit / 128, ~std::uint64_t{0}) {
    clear(1);
    for (std::uint64_t p = 3; p * p < kSieveLimit; p += 2) {
      if (!test(p)) continue;
      for (std::uint64_t m = p * p; m < kSieveLimit; m += 2 * p) clear(m);
    }
  }

  bool test(std::uint64_t odd) const noexcept {
    const std::uint64_t i = odd >> 1;
    return (bits_[i >> 6] >> (i & 63)) & 1;
  }

 private:
  void clear(std::uint64_t odd) noexcept {
    const std::uint64_t i = odd >> 1;
    bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::vector<std::uint64_t> bits_;
};

inline const OddSieve& odd_sieve() {
  static const OddSieve sieve;
  return sieve;
}

/// Primes below 2^16, enough to trial-divide anything below 2^32 fully.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<std::uint32_t> out{2};
    const auto& s = odd_sieve();
    for (std::uint32_t p = 3; p < (1u << 16); p += 2) {
      if (s.test(p)) out.push_back(p);
    }
    return out;
  }();
  return primes;
}

constexpr std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                               std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t powmod(std::uint64_t base, std::uint64_t e,
                               std::uint64_t m) {
  std::uint64_t r = 1;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Miller-Rabin with the first twelve prime bases; exact for n < 3.3e24.
constexpr bool miller_rabin(std::uint64_t n) {
  constexpr std::array<std::uint64_t, 12> bases = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (auto a : bases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline bool prime_test(std::uint64_t n) {
  if (n < 2) return false;
  if ((n & 1) == 0) return n == 2;
  if (n < kSieveLimit) return odd_sieve().test(n);
  return miller_rabin(n);
}

}  // namespace detail

/// Exact primality over the full 64-bit range. Label 1 = prime.
inline Label is_prime(std::uint64_t n) {
  if (n == 0) throw DomainError("is_prime: argument must be positive");
  return {detail::prime_test(n) ? 1u : 0u};
}

/// Number of distinct prime divisors. Trial division by cached small primes;
/// stops as soon as the cofactor is prime.
inline Label omega(std::uint64_t n) {
  if (n < 2) throw DomainError("omega: argument must be at least 2");
  unsigned count = 0;
  if (detail::prime_test(n)) return {1};
  for (std::uint64_t p : detail::small_primes()) {
    if (p * p > n) return {count + (n > 1 ? 1u : 0u)};
    if (n % p == 0) {
      ++count;
      do n /= p; while (n % p == 0);
      if (n == 1) return {count};
      if (detail::prime_test(n)) return {count + 1};
    }
  }
  // Cofactor has no prime factor below 2^16.
  for (std::uint64_t d = (1u << 16) + 1; d <= n / d; d += 2) {
    if (n % d == 0) {
      ++count;
      do n /= d; while (n % d == 0);
      if (n > 1 && detail::prime_test(n)) return {count + 1};
    }
  }
  return {count + (n > 1 ? 1u : 0u)};
}

inline Label label(PropertyKind kind, std::uint64_t n) {
  switch (kind) {
    case PropertyKind::Val2: return val2(n);
    case PropertyKind::BitParity: return tm_parity(n);
    case PropertyKind::Primality: return is_prime(n);
    case PropertyKind::Omega: return omega(n);
  }
  throw std::logic_error("label: bad PropertyKind");
}

inline bool similar(PropertyKind kind, std::uint64_t x, std::uint64_t y) {
  return label(kind, x) == label(kind, y);
}

}  // namespace simseq
