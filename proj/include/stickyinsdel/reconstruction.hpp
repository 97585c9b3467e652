#pragma once

// Reconstruction of a transmitted sequence from M distinct channel outputs.
// Per run j the decoder collects the observed minimum a_j, maximum b_j and
// value counts c_{j,k}; the true run length u_j is the unique value in
// [b_j - t, a_j + s] whose counts respect the ball-size caps
//   c_{j,k} <= A(t, s-u_j+k, r-1)   for a_j <= k <  u_j,
//   c_{j,k} <= A(t-k+u_j, s, r-1)   for u_j <  k <= b_j.
// Both cap families are monotone in u_j, so the set of values satisfying
// them is an interval: the caps of the first family loosen as u_j falls and
// the checked range shrinks, the second family mirrors that upward. Given M
// distinct reads the interval is a single point; on arbitrary input both
// searchers below return the interval's top end, so they agree extensionally
// everywhere, not just in the M-read regime.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stickyinsdel/channel.hpp"
#include "stickyinsdel/combinatorics.hpp"
#include "stickyinsdel/errors.hpp"
#include "stickyinsdel/runlength.hpp"

namespace stickyinsdel {

// The decoder's input: channel outputs plus the budget they were produced
// under. Reads must be pairwise distinct; reconstruct() rejects duplicates
// rather than deduplicating, since a duplicated read silently lowers the
// number of independent observations below M.
struct ReadSet {
  std::vector<Sequence> reads;
  ErrorBudget budget;
};

// Per-run statistics over the reads: observed minimum, maximum, and the
// count of reads per value. Counts are exact integers because synthetic
// profiles (benchmarks) carry counts near the combinatorial caps.
struct FrequencyProfile {
  std::int64_t run_index = 0;  // 1-based j
  std::int64_t min_length = 0;
  std::int64_t max_length = 0;
  std::vector<BigInt> counts;  // counts[k - min_length] = c_{j,k}
  BigInt read_count = 0;       // sum of counts

  const BigInt& count_at(std::int64_t k) const {
    static const BigInt zero = 0;
    if (k < min_length || k > max_length) return zero;
    return counts[static_cast<std::size_t>(k - min_length)];
  }
};

enum class FailureReason {
  composition_mismatch,
  spread_exceeded,
  no_satisfying_value,
  duplicate_reads,
  insufficient_reads,
};

inline std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::composition_mismatch: return "composition-mismatch";
    case FailureReason::spread_exceeded: return "spread-exceeded";
    case FailureReason::no_satisfying_value: return "no-satisfying-value";
    case FailureReason::duplicate_reads: return "duplicate-reads";
    case FailureReason::insufficient_reads: return "insufficient-reads";
  }
  return "unknown";
}

class ReconstructionOutcome {
 public:
  static ReconstructionOutcome success(Sequence x) {
    ReconstructionOutcome out;
    out.sequence_ = std::move(x);
    return out;
  }
  static ReconstructionOutcome failure(FailureReason reason) {
    ReconstructionOutcome out;
    out.reason_ = reason;
    return out;
  }

  bool ok() const { return sequence_.has_value(); }
  const Sequence& sequence() const { return *sequence_; }
  FailureReason reason() const { return reason_; }

 private:
  ReconstructionOutcome() = default;
  std::optional<Sequence> sequence_;
  FailureReason reason_ = FailureReason::no_satisfying_value;
};

// True iff every read has the same composition (same run letters, hence the
// same run count) as the first.
inline bool check_valid(std::span<const Sequence> reads) {
  if (reads.empty()) {
    throw InvalidInput("read set must be non-empty");
  }
  const Composition reference = encode(reads.front()).composition();
  for (std::size_t i = 1; i < reads.size(); ++i) {
    if (encode(reads[i]).composition() != reference) return false;
  }
  return true;
}

// Observed statistics for run `run_index` (1-based) across the reads.
inline FrequencyProfile find_frequency(std::int64_t run_index,
                                       std::span<const RunLengthVector> profiles) {
  if (profiles.empty()) {
    throw InvalidInput("profile list must be non-empty");
  }
  const std::size_t r = profiles.front().size();
  if (run_index < 1 || run_index > static_cast<std::int64_t>(r)) {
    throw InvalidInput("run index out of range");
  }
  const std::size_t j = static_cast<std::size_t>(run_index - 1);
  std::int64_t lo = profiles.front()[j];
  std::int64_t hi = lo;
  for (const RunLengthVector& v : profiles) {
    if (v.size() != r) {
      throw InvalidInput("profiles have different run counts");
    }
    lo = std::min<std::int64_t>(lo, v[j]);
    hi = std::max<std::int64_t>(hi, v[j]);
  }
  FrequencyProfile profile;
  profile.run_index = run_index;
  profile.min_length = lo;
  profile.max_length = hi;
  profile.counts.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const RunLengthVector& v : profiles) {
    ++profile.counts[static_cast<std::size_t>(v[j] - lo)];
  }
  for (const BigInt& c : profile.counts) profile.read_count += c;
  return profile;
}

// Search result plus the instrumented loop-iteration count (candidate/
// position checks for the naive scan, two-pointer steps for the optimized
// one; the optimized final validation pass is not part of the counter).
struct SatisfiedValueSearch {
  std::optional<std::int64_t> value;
  std::uint64_t iterations = 0;
};

namespace detail {

inline void require_searchable(const FrequencyProfile& profile,
                               const ErrorBudget& budget,
                               std::int64_t run_count) {
  if (run_count < 1) {
    throw InvalidInput("run count must be positive");
  }
  if (profile.min_length > profile.max_length ||
      profile.counts.size() !=
          static_cast<std::size_t>(profile.max_length - profile.min_length + 1)) {
    throw InvalidInput("malformed frequency profile");
  }
  if (profile.max_length - profile.min_length >
      budget.insertions() + budget.deletions()) {
    throw InvalidInput("profile spread exceeds the error budget");
  }
}

// Properties 2 and 3 for candidate u (property 1 is the window itself).
inline bool satisfies_caps(const FrequencyProfile& profile,
                           const ErrorBudget& budget, std::int64_t run_count,
                           const BallSizeTable& table, std::int64_t u) {
  const std::int64_t t = budget.insertions();
  const std::int64_t s = budget.deletions();
  const std::int64_t a = profile.min_length;
  const std::int64_t b = profile.max_length;
  for (std::int64_t k = a; k <= std::min(u - 1, b); ++k) {
    if (profile.count_at(k) > table.ball_size(t, s - u + k, run_count - 1)) {
      return false;
    }
  }
  for (std::int64_t k = std::max(u + 1, a); k <= b; ++k) {
    if (profile.count_at(k) > table.ball_size(t - k + u, s, run_count - 1)) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Scans candidates from a_j+s downward and returns the first one whose
// counts satisfy both cap families, checking every window position per
// candidate.
inline SatisfiedValueSearch find_satisfied_value_naive(
    const FrequencyProfile& profile, const ErrorBudget& budget,
    std::int64_t run_count, const BallSizeTable& table) {
  detail::require_searchable(profile, budget, run_count);
  const std::int64_t t = budget.insertions();
  const std::int64_t s = budget.deletions();
  const std::int64_t a = profile.min_length;
  const std::int64_t b = profile.max_length;

  SatisfiedValueSearch result;
  for (std::int64_t u = a + s; u >= b - t; --u) {
    bool ok = true;
    for (std::int64_t k = a; k <= b; ++k) {
      if (k == u) continue;
      ++result.iterations;
      const BigInt& cap = k < u ? table.ball_size(t, s - u + k, run_count - 1)
                                : table.ball_size(t - k + u, s, run_count - 1);
      if (profile.count_at(k) > cap) ok = false;
    }
    if (ok) {
      result.value = u;
      return result;
    }
  }
  return result;
}

// Two-pointer search. Candidate u starts at the window top a_j+s and the
// position pointer k just below it; a failed lower-cap check retires the
// candidate (every higher candidate has already failed or been passed), a
// passed check retires the position (it passes for every lower candidate
// too). Both pointers only move down, so the loop runs at most 2(t+s)+2
// times. The survivor still needs the upper-cap family checked, which the
// final validation does in one O(t+s) pass; on inconsistent input that
// validation is what turns a bogus survivor into a failure.
inline SatisfiedValueSearch find_satisfied_value_optimized(
    const FrequencyProfile& profile, const ErrorBudget& budget,
    std::int64_t run_count, const BallSizeTable& table) {
  detail::require_searchable(profile, budget, run_count);
  const std::int64_t t = budget.insertions();
  const std::int64_t s = budget.deletions();
  const std::int64_t a = profile.min_length;
  const std::int64_t b = profile.max_length;
  const std::int64_t window_low = b - t;
  const std::int64_t window_high = a + s;

  SatisfiedValueSearch result;
  std::int64_t u = window_high;
  std::int64_t k = window_high - 1;
  while (true) {
    ++result.iterations;
    if (k < a) break;
    if (u < window_low) return result;
    if (k == u) {
      --k;
      continue;
    }
    // k < u here: lower-cap check; counts outside [a_j, b_j] are zero.
    if (profile.count_at(k) > table.ball_size(t, s - u + k, run_count - 1)) {
      --u;
    } else {
      --k;
    }
  }
  if (u < window_low || u > window_high ||
      !detail::satisfies_caps(profile, budget, run_count, table, u)) {
    return result;
  }
  result.value = u;
  return result;
}

// All centers consistent with every read, found by exhaustive search over
// the per-coordinate boxes [max(1, b_j - t), a_j + s]. The transmitted
// center always lies in the box, so the result is a superset of the truth;
// with M distinct reads it is exactly the singleton {u}.
inline std::vector<RunLengthVector> brute_force_candidates(
    const ReadSet& read_set, std::uint64_t max_states = kDefaultWorkBound) {
  if (read_set.reads.empty()) {
    throw InvalidInput("read set must be non-empty");
  }
  if (!check_valid(read_set.reads)) {
    throw InvalidInput("reads have mixed compositions");
  }
  const std::int64_t t = read_set.budget.insertions();
  const std::int64_t s = read_set.budget.deletions();

  std::vector<RunLengthVector> profiles;
  profiles.reserve(read_set.reads.size());
  for (const Sequence& y : read_set.reads) {
    profiles.push_back(encode(y).lengths());
  }
  const std::size_t r = profiles.front().size();

  std::vector<std::int64_t> lo(r), hi(r);
  BigInt volume = 1;
  for (std::size_t j = 0; j < r; ++j) {
    std::int64_t a = profiles.front()[j];
    std::int64_t b = a;
    for (const RunLengthVector& v : profiles) {
      a = std::min<std::int64_t>(a, v[j]);
      b = std::max<std::int64_t>(b, v[j]);
    }
    lo[j] = std::max<std::int64_t>(1, b - t);
    hi[j] = a + s;
    if (lo[j] > hi[j]) return {};
    volume *= hi[j] - lo[j] + 1;
  }
  if (volume > max_states) {
    throw WorkBoundExceeded("candidate box holds " + volume.str() +
                            " states, cap is " + std::to_string(max_states));
  }

  std::vector<RunLengthVector> candidates;
  std::vector<RunLength> current(r, 0);
  auto dfs = [&](auto&& self, std::size_t j) -> void {
    if (j == r) {
      RunLengthVector center(current);
      for (const RunLengthVector& v : profiles) {
        if (!contains(center, v, read_set.budget)) return;
      }
      candidates.push_back(std::move(center));
      return;
    }
    for (std::int64_t value = lo[j]; value <= hi[j]; ++value) {
      current[j] = value;
      self(self, j + 1);
    }
  };
  dfs(dfs, 0);
  return candidates;
}

// Strict reconstruction from at least M = reads_required(t,s,r) distinct
// reads. On success every read is inside the ball of the returned sequence;
// when the reads really are M distinct outputs for one transmitted x, the
// result is exactly x.
inline ReconstructionOutcome reconstruct(
    const ReadSet& read_set,
    std::optional<std::int64_t> expected_run_count = std::nullopt) {
  if (read_set.reads.empty()) {
    throw InvalidInput("read set must be non-empty");
  }
  {
    std::set<Sequence> unique(read_set.reads.begin(), read_set.reads.end());
    if (unique.size() != read_set.reads.size()) {
      return ReconstructionOutcome::failure(FailureReason::duplicate_reads);
    }
  }
  if (!check_valid(read_set.reads)) {
    return ReconstructionOutcome::failure(FailureReason::composition_mismatch);
  }

  const RunProfile first = encode(read_set.reads.front());
  const std::int64_t r = static_cast<std::int64_t>(first.run_count());
  if (expected_run_count && *expected_run_count != r) {
    throw InvalidInput("reads have " + std::to_string(r) + " runs, expected " +
                       std::to_string(*expected_run_count));
  }

  const std::int64_t t = read_set.budget.insertions();
  const std::int64_t s = read_set.budget.deletions();
  const BallSizeTable& table = shared_ball_table();
  if (BigInt(read_set.reads.size()) < table.reads_required(t, s, r)) {
    return ReconstructionOutcome::failure(FailureReason::insufficient_reads);
  }

  std::vector<RunLengthVector> profiles;
  profiles.reserve(read_set.reads.size());
  for (const Sequence& y : read_set.reads) {
    profiles.push_back(encode(y).lengths());
  }

  std::vector<RunLength> recovered(static_cast<std::size_t>(r), 0);
  for (std::int64_t j = 1; j <= r; ++j) {
    FrequencyProfile profile = find_frequency(j, profiles);
    const std::int64_t spread = profile.max_length - profile.min_length;
    std::int64_t value = 0;
    if (spread > s + t) {
      return ReconstructionOutcome::failure(FailureReason::spread_exceeded);
    } else if (spread == s + t) {
      value = profile.min_length + s;  // window is the single point b-t = a+s
    } else {
      SatisfiedValueSearch search =
          find_satisfied_value_optimized(profile, read_set.budget, r, table);
      if (!search.value || *search.value < 1) {
        return ReconstructionOutcome::failure(FailureReason::no_satisfying_value);
      }
      value = *search.value;
    }
    recovered[static_cast<std::size_t>(j - 1)] = value;
  }

  RunLengthVector lengths(std::move(recovered));
  // Inconsistent read sets can defeat the per-run search; the outcome must
  // never claim a center whose ball misses a read.
  for (const RunLengthVector& v : profiles) {
    if (!contains(lengths, v, read_set.budget)) {
      return ReconstructionOutcome::failure(FailureReason::no_satisfying_value);
    }
  }
  return ReconstructionOutcome::success(decode(first.composition(), lengths));
}

}  // namespace stickyinsdel
