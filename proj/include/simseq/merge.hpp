#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simseq/closed.hpp"
#include "simseq/genseq.hpp"
#include "simseq/parallel.hpp"
#include "simseq/props.hpp"

namespace simseq {

/// r(n) = x_n(A) - x_n(B) at one sampled index.
struct DiffSample {
  std::uint64_t n = 0;
  std::int64_t r = 0;
  bool operator==(const DiffSample&) const = default;
};

struct MergeOptions {
  /// Record r(n) at n = 1 (mod 8), n > n0, up to the end of the suffix window.
  bool trace = false;
  /// After a merge at n*, both runs keep going through
  /// min(limit, 2 n* + suffix_pad) and must agree at every index.
  std::uint64_t suffix_pad = 1024;
};

struct MergeReport {
  SequenceSpec a;
  SequenceSpec b;
  std::uint64_t limit = 0;
  std::optional<std::uint64_t> merge_index;
  std::uint64_t merge_value = 0;
  /// Last index compared after the merge, and whether all of them agreed.
  std::uint64_t suffix_end = 0;
  bool suffix_consistent = true;
  /// Value of run A at the first power-of-two index >= merge_index, when that
  /// index falls inside the suffix window.
  std::optional<std::uint64_t> landmark_index;
  std::uint64_t landmark_value = 0;
  std::vector<DiffSample> diff_trace;

  bool merged() const { return merge_index.has_value(); }
};

/// True when r(n) never increases along the trace and ends at zero.
inline bool trace_settles(const std::vector<DiffSample>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i) {
    if (trace[i].r > trace[i - 1].r) return false;
  }
  return !trace.empty() && trace.back().r == 0;
}

inline MergeReport find_merge(const SequenceSpec& a, const SequenceSpec& b,
                              std::uint64_t limit, const MergeOptions& opt = {}) {
  if (a.kind != b.kind) {
    throw InvalidSpec("find_merge: runs use different properties (" +
                      std::string(to_string(a.kind)) + " vs " +
                      std::string(to_string(b.kind)) + ")");
  }
  if (a.n0 != b.n0) {
    throw InvalidSpec("find_merge: runs start at different indices");
  }
  validate(a);
  validate(b);

  MergeReport rep{a, b, limit, {}, 0, 0, true, {}, 0, {}};
  Cursor ca(a), cb(b);
  auto sample = [&] {
    const auto n = ca.index();
    if (opt.trace && n > a.n0 && n % 8 == 1) {
      rep.diff_trace.push_back(
          {n, static_cast<std::int64_t>(ca.value() - cb.value())});
    }
  };

  while (true) {
    sample();
    if (ca.value() == cb.value()) {
      rep.merge_index = ca.index();
      rep.merge_value = ca.value();
      break;
    }
    if (ca.index() >= limit) return rep;
    ca.advance();
    cb.advance();
  }

  const std::uint64_t nstar = *rep.merge_index;
  const std::uint64_t landmark = std::bit_ceil(nstar);
  const std::uint64_t end =
      std::max(nstar, std::min(limit, 2 * nstar + opt.suffix_pad));
  while (ca.index() < end) {
    ca.advance();
    cb.advance();
    sample();
    if (ca.value() != cb.value()) rep.suffix_consistent = false;
  }
  rep.suffix_end = end;
  if (landmark <= end) {
    Cursor probe(a);
    probe.advance_to(landmark);
    rep.landmark_index = landmark;
    rep.landmark_value = probe.value();
  }
  return rep;
}

/// Per-seed failure record for the merge sweeps.
struct SeedIssue {
  std::uint64_t seed = 0;
  std::string what;
  bool operator==(const SeedIssue&) const = default;
};

struct MergeSweepSummary {
  std::uint64_t seeds_checked = 0;
  std::uint64_t max_merge_index = 0;
  std::uint64_t worst_seed = 0;  // smallest seed attaining max_merge_index
  std::vector<SeedIssue> issues;

  bool passed() const { return issues.empty(); }
  bool operator==(const MergeSweepSummary&) const = default;
};

namespace detail {

inline MergeSweepSummary combine_sweeps(MergeSweepSummary a,
                                        MergeSweepSummary b) {
  a.seeds_checked += b.seeds_checked;
  if (b.max_merge_index > a.max_merge_index) {
    a.max_merge_index = b.max_merge_index;
    a.worst_seed = b.worst_seed;
  }
  a.issues.insert(a.issues.end(), b.issues.begin(), b.issues.end());
  return a;
}

inline void record_merge(MergeSweepSummary& s, std::uint64_t seed,
                         const MergeReport& rep) {
  ++s.seeds_checked;
  if (!rep.merged()) {
    s.issues.push_back({seed, "no merge up to " + std::to_string(rep.limit)});
    return;
  }
  if (!rep.suffix_consistent) {
    s.issues.push_back({seed, "runs diverge after merge index " +
                                  std::to_string(*rep.merge_index)});
  }
  if (*rep.merge_index > s.max_merge_index) {
    s.max_merge_index = *rep.merge_index;
    s.worst_seed = seed;
  }
}

}  // namespace detail

/// Every odd seed 3 <= a <= a_max of the Val2 run merges with seed 3 and hits
/// x(2^T) = 3 * 2^T at the first power-of-two index past the merge.
inline MergeSweepSummary verify_theorem2(std::uint64_t a_max,
                                         std::uint64_t limit,
                                         unsigned workers = 1) {
  if (a_max < 3) throw DomainError("verify_theorem2: a_max must be >= 3");
  const auto ref = make_spec(PropertyKind::Val2, 3);
  return parallel_reduce<MergeSweepSummary>(
      3, a_max + 1, workers, MergeSweepSummary{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        MergeSweepSummary s;
        for (std::uint64_t a = lo | 1; a < hi; a += 2) {
          const auto rep =
              find_merge(make_spec(PropertyKind::Val2, a), ref, limit);
          detail::record_merge(s, a, rep);
          if (!rep.merged()) continue;
          if (!rep.landmark_index) {
            s.issues.push_back({a, "power-of-two landmark outside window"});
          } else if (rep.landmark_value != 3 * *rep.landmark_index) {
            s.issues.push_back(
                {a, "x(" + std::to_string(*rep.landmark_index) +
                        ") = " + std::to_string(rep.landmark_value)});
          }
        }
        return s;
      },
      detail::combine_sweeps);
}

/// x_n(seed 2) < x_n(seed 4) for the BitParity runs, n <= limit.
inline ClosedFormReport corollary5_check(std::uint64_t limit) {
  ClosedFormReport rep{"x2 < x4", 1, limit, std::nullopt};
  Cursor low(make_spec(PropertyKind::BitParity, 2));
  Cursor high(make_spec(PropertyKind::BitParity, 4));
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (n > 1) {
      low.advance();
      high.advance();
    }
    if (low.value() >= high.value()) {
      rep.first_mismatch = n;
      break;
    }
  }
  return rep;
}

struct Theorem3Summary {
  MergeSweepSummary odious;
  bool seed2_merged = false;
  ClosedFormReport corollary5;

  bool passed() const {
    return odious.passed() && !seed2_merged && corollary5.passed();
  }
  bool operator==(const Theorem3Summary&) const = default;
};

/// Every odious seed 4 <= a <= a_max merges with seed 4 and its r(n) trace
/// never increases; seed 2 never merges and stays strictly below.
inline Theorem3Summary verify_theorem3(std::uint64_t a_max, std::uint64_t limit,
                                       std::uint64_t corollary5_limit,
                                       unsigned workers = 1) {
  if (a_max < 4) throw DomainError("verify_theorem3: a_max must be >= 4");
  const auto ref = make_spec(PropertyKind::BitParity, 4);
  Theorem3Summary out;
  out.odious = parallel_reduce<MergeSweepSummary>(
      4, a_max + 1, workers, MergeSweepSummary{},
      [&](std::uint64_t lo, std::uint64_t hi) {
        MergeSweepSummary s;
        for (std::uint64_t a = lo; a < hi; ++a) {
          if (tm_bit(a) != 1) continue;
          const auto rep = find_merge(make_spec(PropertyKind::BitParity, a),
                                      ref, limit, {.trace = true});
          detail::record_merge(s, a, rep);
          if (rep.merged() && a > 4 && !trace_settles(rep.diff_trace)) {
            s.issues.push_back({a, "r(n) trace increases or never settles"});
          }
        }
        return s;
      },
      detail::combine_sweeps);
  out.seed2_merged =
      find_merge(make_spec(PropertyKind::BitParity, 2), ref, limit).merged();
  out.corollary5 = corollary5_check(corollary5_limit);
  return out;
}

enum class OpenProblem { A3Seed16, A3General, A4General };

inline std::string_view to_string(OpenProblem p) {
  switch (p) {
    case OpenProblem::A3Seed16: return "a3-16";
    case OpenProblem::A3General: return "a3-general";
    case OpenProblem::A4General: return "a4-general";
  }
  return "?";
}

inline OpenProblem parse_open_problem(std::string_view s) {
  for (auto p : {OpenProblem::A3Seed16, OpenProblem::A3General,
                 OpenProblem::A4General}) {
    if (s == to_string(p)) return p;
  }
  throw std::invalid_argument("unknown problem '" + std::string(s) +
                              "' (expected a3-16, a3-general or a4-general)");
}

struct ExploreParams {
  /// Seeds to compare against the reference; empty selects the default set.
  std::vector<std::uint64_t> seeds;
  /// Upper bound for the default seed set of the *-general problems.
  std::uint64_t seed_max = 64;
};

struct ExploreFinding {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> merge_index;
  bool suffix_consistent = true;
};

/// A finding report only: "open up to limit" is a result, not a failure.
struct ExploreReport {
  OpenProblem problem = OpenProblem::A3Seed16;
  PropertyKind kind = PropertyKind::Primality;
  std::uint64_t n0 = 1;
  std::uint64_t reference = 4;
  std::uint64_t limit = 0;
  std::vector<ExploreFinding> findings;
};

inline ExploreReport explore_open(OpenProblem problem, ExploreParams params,
                                  std::uint64_t limit, unsigned workers = 1) {
  ExploreReport rep;
  rep.problem = problem;
  rep.limit = limit;
  if (problem == OpenProblem::A4General) {
    rep.kind = PropertyKind::Omega;
    rep.n0 = 2;
    rep.reference = 3;
  }
  if (params.seeds.empty()) {
    if (problem == OpenProblem::A3Seed16) {
      params.seeds = {16};
    } else {
      for (std::uint64_t a = rep.reference + 1; a <= params.seed_max; ++a) {
        if (similar(rep.kind, a, rep.n0)) params.seeds.push_back(a);
      }
    }
  }
  const SequenceSpec ref{rep.kind, rep.n0, rep.reference};
  rep.findings = parallel_reduce<std::vector<ExploreFinding>>(
      0, params.seeds.size(), workers, {},
      [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<ExploreFinding> out;
        for (auto i = lo; i < hi; ++i) {
          const auto m = find_merge({rep.kind, rep.n0, params.seeds[i]}, ref,
                                    limit);
          out.push_back({params.seeds[i], m.merge_index, m.suffix_consistent});
        }
        return out;
      },
      [](std::vector<ExploreFinding> a, std::vector<ExploreFinding> b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      params.seeds.size());
  return rep;
}

}  // namespace simseq
