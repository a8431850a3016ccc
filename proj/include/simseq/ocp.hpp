#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "simseq/genseq.hpp"
#include "simseq/parallel.hpp"
#include "simseq/props.hpp"

namespace simseq {

/// Parity changes across the nine integers 4k+1 .. 4k+9:
/// entries[i] = t(4k+1+i) xor t(4k+2+i), 1 = change, 0 = no change.
struct OcpProfile {
  std::uint64_t k = 1;
  std::array<unsigned, 8> entries{};

  /// Shape forced by Thue-Morse blocks: {0,1,c1,1,0,1,c2,1}, (c1,c2) != (0,0).
  bool has_forced_shape() const {
    return entries[0] == 0 && entries[1] == 1 && entries[3] == 1 &&
           entries[4] == 0 && entries[5] == 1 && entries[7] == 1 &&
           (entries[2] | entries[6]) == 1;
  }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ',';
      s += static_cast<char>('0' + entries[i]);
    }
    return s + "}";
  }

  bool operator==(const OcpProfile&) const = default;
};

inline OcpProfile ocp_profile(std::uint64_t k) {
  if (k == 0) throw DomainError("ocp_profile: k must be positive");
  OcpProfile p{k, {}};
  const std::uint64_t base = 4 * k + 1;
  for (unsigned i = 0; i < 8; ++i) {
    p.entries[i] = tm_bit(base + i) ^ tm_bit(base + i + 1);
  }
  return p;
}

enum class ParityGoal { Change, NotChange };
enum class StepKind { Regular, Singular };

struct StepClass {
  std::uint64_t n = 1;
  ParityGoal goal = ParityGoal::Change;
  StepKind kind = StepKind::Regular;
  unsigned witness = 1;  // least increment in {1,2,3} reaching the goal
};

inline StepClass classify_step(std::uint64_t n, ParityGoal goal) {
  if (n == 0) throw DomainError("classify_step: n must be positive");
  const unsigned want = goal == ParityGoal::Change ? 1 : 0;
  for (unsigned d = 1; d <= 3; ++d) {
    if ((tm_bit(n + d) ^ tm_bit(n)) == want) {
      return {n, goal, d <= 2 ? StepKind::Regular : StepKind::Singular, d};
    }
  }
  // Unreachable: any four consecutive integers hold both parities.
  throw std::logic_error("classify_step: no witness within 3");
}

/// Length of the run of 1-bits directly above the trailing 0-bits of n.
constexpr unsigned last_ones_run(std::uint64_t n) {
  if (n == 0) return 0;
  return static_cast<unsigned>(std::countr_one(n >> std::countr_zero(n)));
}

/// psi over [4k+1, 4k+9] seeded with psi(4k+1) = N.
struct PsiTrace {
  std::uint64_t k = 1;
  std::uint64_t start = 1;  // N
  std::array<std::uint64_t, 9> values{};
  std::array<unsigned, 8> jumps{};

  std::uint64_t first_index() const { return 4 * k + 1; }
  std::uint64_t spread() const { return values[8] - values[0]; }
};

inline PsiTrace psi_run(std::uint64_t k, std::uint64_t start) {
  if (k == 0 || start == 0) {
    throw DomainError("psi_run: k and N must be positive");
  }
  const std::uint64_t base = 4 * k + 1;
  if (tm_bit(start) != tm_bit(base)) {
    throw InvalidSpec("psi_run: N=" + std::to_string(start) + " has parity " +
                      std::to_string(tm_bit(start)) + " but 4k+1=" +
                      std::to_string(base) + " has parity " +
                      std::to_string(tm_bit(base)));
  }
  PsiTrace tr{k, start, {}, {}};
  tr.values[0] = start;
  for (unsigned i = 1; i < 9; ++i) {
    tr.values[i] = step(PropertyKind::BitParity, base + i, tr.values[i - 1]);
    tr.jumps[i - 1] = static_cast<unsigned>(tr.values[i] - tr.values[i - 1]);
  }
  return tr;
}

struct Theorem5Summary {
  std::uint64_t runs = 0;
  std::uint64_t max_spread = 0;
  // First (k, N) in lexicographic order attaining max_spread.
  std::uint64_t argmax_k = 0;
  std::uint64_t argmax_n = 0;

  bool operator==(const Theorem5Summary&) const = default;
};

/// Every k <= k_max and parity-valid N <= n_max; records max psi(4k+9) - N.
inline Theorem5Summary theorem5_sweep(std::uint64_t k_max, std::uint64_t n_max,
                                      unsigned workers = 1) {
  return parallel_reduce<Theorem5Summary>(
      1, k_max + 1, workers, Theorem5Summary{},
      [n_max](std::uint64_t lo, std::uint64_t hi) {
        Theorem5Summary s;
        for (std::uint64_t k = lo; k < hi; ++k) {
          const unsigned parity = tm_bit(4 * k + 1);
          for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (tm_bit(n) != parity) continue;
            const auto spread = psi_run(k, n).spread();
            ++s.runs;
            if (spread > s.max_spread) {
              s.max_spread = spread;
              s.argmax_k = k;
              s.argmax_n = n;
            }
          }
        }
        return s;
      },
      [](Theorem5Summary a, const Theorem5Summary& b) {
        a.runs += b.runs;
        if (b.max_spread > a.max_spread) {
          a.max_spread = b.max_spread;
          a.argmax_k = b.argmax_k;
          a.argmax_n = b.argmax_n;
        }
        return a;
      });
}

inline constexpr std::uint64_t kLemma9ScanCap = std::uint64_t{1} << 40;

/// Least n >= from with t(2n + C) != t(2n); empty if the cap is reached.
inline std::optional<std::uint64_t> lemma9_counterexample(
    std::uint64_t c, std::uint64_t from = 1, std::uint64_t cap = kLemma9ScanCap) {
  if (c == 0) throw DomainError("lemma9_counterexample: C must be positive");
  for (std::uint64_t n = std::max<std::uint64_t>(from, 1); n <= cap; ++n) {
    if (tm_bit(2 * n + c) != tm_bit(2 * n)) return n;
  }
  return std::nullopt;
}

}  // namespace simseq
