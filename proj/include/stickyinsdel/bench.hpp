#pragma once

// Counter benchmark for the two FindSatisfiedValue variants. Profiles are
// generated adversarially: the heavy count sits at the window bottom's
// killer position, so the naive scan walks the whole candidate range while
// the two-pointer stays linear. Iteration counters are deterministic for a
// seed; wall-clock numbers are informative only.

#include <chrono>
#include <cstdint>
#include <vector>

#include "stickyinsdel/channel.hpp"
#include "stickyinsdel/combinatorics.hpp"
#include "stickyinsdel/reconstruction.hpp"

namespace stickyinsdel {

struct AdversarialProfile {
  FrequencyProfile profile;
  std::int64_t expected_value = 0;
};

// Window [a, a+window] whose counts admit exactly one satisfying value,
// b - t, at the very bottom of the candidate range. Requires window in
// [t, t+s-1] (so s >= 1) and run_count >= 2: the count at the low edge is
// one above the cap of candidate b-t+1, which by strict monotonicity of the
// caps still satisfies candidate b-t while retiring everything above it.
inline AdversarialProfile adversarial_profile(const ErrorBudget& budget,
                                              std::int64_t run_count,
                                              std::int64_t window,
                                              const BallSizeTable& table,
                                              ChannelRng& rng) {
  const std::int64_t t = budget.insertions();
  const std::int64_t s = budget.deletions();
  if (run_count < 2 || s < 1 || window < t || window > t + s - 1) {
    throw InvalidInput("adversarial profile needs run_count >= 2 and t <= window < t+s");
  }
  AdversarialProfile out;
  FrequencyProfile& p = out.profile;
  p.run_index = 1;
  p.min_length = std::max<std::int64_t>(1, t - window + 1);
  p.max_length = p.min_length + window;
  p.counts.assign(static_cast<std::size_t>(window + 1), 0);
  p.counts.front() = table.ball_size(t, s + t - window - 1, run_count - 1) + 1;
  p.counts.back() = 1;
  for (std::size_t i = 1; i + 1 < p.counts.size(); ++i) {
    p.counts[i] = static_cast<std::int64_t>(rng.next_below(2));
  }
  for (const BigInt& c : p.counts) p.read_count += c;
  out.expected_value = p.max_length - t;
  return out;
}

struct BenchRow {
  std::int64_t insertions = 0;
  std::int64_t deletions = 0;
  std::int64_t run_count = 0;
  std::int64_t window = 0;
  int trials = 0;
  std::uint64_t naive_iterations = 0;      // summed over trials
  std::uint64_t optimized_iterations = 0;  // summed over trials
  std::uint64_t max_optimized_iterations = 0;  // per call
  std::uint64_t optimized_iteration_bound = 0; // 2(t+s)+2
  bool values_agree = true;  // naive == optimized == planted value, all trials
  double naive_seconds = 0.0;
  double optimized_seconds = 0.0;
};

inline BenchRow run_find_satisfied_value_bench(const ErrorBudget& budget,
                                               std::int64_t run_count,
                                               int trials, std::uint64_t seed,
                                               const BallSizeTable& table) {
  const std::int64_t t = budget.insertions();
  const std::int64_t s = budget.deletions();
  BenchRow row;
  row.insertions = t;
  row.deletions = s;
  row.run_count = run_count;
  row.window = std::max<std::int64_t>(t, (t + s) / 2);
  row.trials = trials;
  row.optimized_iteration_bound = 2 * static_cast<std::uint64_t>(t + s) + 2;

  ChannelRng rng(seed);
  using clock = std::chrono::steady_clock;
  for (int trial = 0; trial < trials; ++trial) {
    AdversarialProfile adversarial =
        adversarial_profile(budget, run_count, row.window, table, rng);

    auto start = clock::now();
    SatisfiedValueSearch naive =
        find_satisfied_value_naive(adversarial.profile, budget, run_count, table);
    row.naive_seconds += std::chrono::duration<double>(clock::now() - start).count();

    start = clock::now();
    SatisfiedValueSearch optimized = find_satisfied_value_optimized(
        adversarial.profile, budget, run_count, table);
    row.optimized_seconds +=
        std::chrono::duration<double>(clock::now() - start).count();

    row.naive_iterations += naive.iterations;
    row.optimized_iterations += optimized.iterations;
    row.max_optimized_iterations =
        std::max(row.max_optimized_iterations, optimized.iterations);
    if (naive.value != optimized.value || !naive.value ||
        *naive.value != adversarial.expected_value) {
      row.values_agree = false;
    }
  }
  return row;
}

}  // namespace stickyinsdel
