#pragma once

// The (t,s)-sticky-insdel error model. A sticky insertion duplicates a
// symbol next to an identical one (one run grows by one); a sticky deletion
// removes a symbol from a run of length at least two (one run shrinks by
// one, never vanishing). Composition and run count are invariant, so the
// whole channel acts on run-length vectors. Ball enumeration and the
// intersection counters here are deliberately brute force: they are the
// desk-scale oracles the exact formulas are checked against.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "stickyinsdel/combinatorics.hpp"
#include "stickyinsdel/errors.hpp"
#include "stickyinsdel/runlength.hpp"

namespace stickyinsdel {

inline constexpr std::uint64_t kDefaultWorkBound = 10'000'000;

// Deterministic generator: identical seed and call sequence give identical
// outputs on every platform (the uniform draw avoids the implementation-
// defined std::uniform_int_distribution).
class ChannelRng {
 public:
  explicit ChannelRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform draw from [0, bound) by rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) {
      throw InvalidInput("uniform bound must be positive");
    }
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t raw;
    do {
      raw = engine_();
    } while (raw >= limit);
    return raw % bound;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[next_below(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct AsymmetricBallQuery {
  RunLengthVector center;
  ErrorBudget budget;
};

// Grow run `run_index` (1-based) by one symbol.
inline Sequence apply_sticky_insertion(const Sequence& x, std::int64_t run_index) {
  RunProfile profile = encode(x);
  if (run_index < 1 || run_index > static_cast<std::int64_t>(profile.run_count())) {
    throw InvalidInput("run index out of range");
  }
  std::vector<RunLength> lengths = profile.lengths().values();
  ++lengths[static_cast<std::size_t>(run_index - 1)];
  return decode(profile.composition(), RunLengthVector(std::move(lengths)));
}

// Shrink run `run_index` (1-based) by one symbol; the run must have length
// at least two.
inline Sequence apply_sticky_deletion(const Sequence& x, std::int64_t run_index) {
  RunProfile profile = encode(x);
  if (run_index < 1 || run_index > static_cast<std::int64_t>(profile.run_count())) {
    throw InvalidInput("run index out of range");
  }
  std::vector<RunLength> lengths = profile.lengths().values();
  RunLength& target = lengths[static_cast<std::size_t>(run_index - 1)];
  if (target < 2) {
    throw RunTooShort("cannot delete from a run of length one");
  }
  --target;
  return decode(profile.composition(), RunLengthVector(std::move(lengths)));
}

// One channel use. Sampling policy: the insertion count is uniform on
// [0, t] and the deletion count uniform on [0, s]; the errors are applied
// in a uniformly shuffled order, each picking a uniform run, with deletions
// that hit a length-one run resampled. A deletion is skipped outright when
// every run has length one (resampling could never land). The output is
// always inside the (t,s) ball of x and is reproducible from the seed.
inline Sequence transmit(const Sequence& x, const ErrorBudget& budget,
                         ChannelRng& rng) {
  RunProfile profile = encode(x);
  std::vector<RunLength> lengths = profile.lengths().values();
  const std::uint64_t runs = lengths.size();

  const std::uint64_t insertions =
      rng.next_below(static_cast<std::uint64_t>(budget.insertions()) + 1);
  const std::uint64_t deletions =
      rng.next_below(static_cast<std::uint64_t>(budget.deletions()) + 1);

  enum class Op : std::uint8_t { insert, erase };
  std::vector<Op> ops;
  ops.insert(ops.end(), insertions, Op::insert);
  ops.insert(ops.end(), deletions, Op::erase);
  rng.shuffle(ops);

  for (Op op : ops) {
    if (op == Op::insert) {
      ++lengths[rng.next_below(runs)];
    } else {
      bool deletable = false;
      for (RunLength v : lengths) {
        if (v >= 2) {
          deletable = true;
          break;
        }
      }
      if (!deletable) continue;
      std::uint64_t j;
      do {
        j = rng.next_below(runs);
      } while (lengths[j] < 2);
      --lengths[j];
    }
  }
  return decode(profile.composition(), RunLengthVector(std::move(lengths)));
}

// v lies in the asymmetric ball of u iff the total downward deviation is at
// most s and the total upward deviation at most t.
inline bool contains(const RunLengthVector& center,
                     const RunLengthVector& candidate,
                     const ErrorBudget& budget) {
  if (center.size() != candidate.size()) {
    throw InvalidInput("run-length vectors have different lengths");
  }
  std::int64_t down = 0;
  std::int64_t up = 0;
  for (std::size_t i = 0; i < center.size(); ++i) {
    const RunLength d = center[i] - candidate[i];
    if (d > 0) {
      down += d;
    } else {
      up -= d;
    }
  }
  return down <= budget.deletions() && up <= budget.insertions();
}

// Sequence-level ball membership: same composition and contained lengths.
inline bool ball_contains(const Sequence& center, const Sequence& candidate,
                          const ErrorBudget& budget) {
  RunProfile cp = encode(center);
  RunProfile qp = encode(candidate);
  return cp.composition() == qp.composition() &&
         contains(cp.lengths(), qp.lengths(), budget);
}

// Visits every element of the asymmetric ball exactly once, in
// lexicographic order. The visitor returns false to stop early. Throws
// WorkBoundExceeded once more than max_states vectors have been produced.
inline void enumerate_asymmetric_ball(
    const AsymmetricBallQuery& query,
    const std::function<bool(const RunLengthVector&)>& visit,
    std::uint64_t max_states = kDefaultWorkBound) {
  const auto& center = query.center.values();
  const std::size_t r = center.size();
  std::vector<RunLength> current(r, 0);
  std::uint64_t produced = 0;
  bool stopped = false;

  // DFS by position; every branch is feasible (v_i = u_i always fits), so
  // interior states are dominated by emitted vectors.
  auto dfs = [&](auto&& self, std::size_t i, std::int64_t insert_left,
                 std::int64_t delete_left) -> void {
    if (stopped) return;
    if (i == r) {
      if (++produced > max_states) {
        throw WorkBoundExceeded("ball enumeration exceeded " +
                                std::to_string(max_states) + " states");
      }
      if (!visit(RunLengthVector(current))) stopped = true;
      return;
    }
    const RunLength lo = std::max<RunLength>(1, center[i] - delete_left);
    const RunLength hi = center[i] + insert_left;
    for (RunLength v = lo; v <= hi && !stopped; ++v) {
      current[i] = v;
      self(self, i + 1, insert_left - std::max<RunLength>(0, v - center[i]),
           delete_left - std::max<RunLength>(0, center[i] - v));
    }
  };
  dfs(dfs, 0, query.budget.insertions(), query.budget.deletions());
}

inline std::vector<RunLengthVector> asymmetric_ball(
    const AsymmetricBallQuery& query,
    std::uint64_t max_states = kDefaultWorkBound) {
  std::vector<RunLengthVector> out;
  enumerate_asymmetric_ball(
      query,
      [&](const RunLengthVector& v) {
        out.push_back(v);
        return true;
      },
      max_states);
  return out;
}

// |A_{t,s}(u)| by enumeration. Bounded above by A(t,s,r), with equality
// whenever every entry of u is at least s+1.
inline BigInt ball_size_brute(const RunLengthVector& center,
                              const ErrorBudget& budget,
                              std::uint64_t max_states = kDefaultWorkBound) {
  BigInt count = 0;
  enumerate_asymmetric_ball(
      AsymmetricBallQuery{center, budget},
      [&](const RunLengthVector&) {
        ++count;
        return true;
      },
      max_states);
  return count;
}

// The elements of A_{t,s}(u) ∩ A_{t,s}(v), lexicographic.
inline std::vector<RunLengthVector> intersection_brute(
    const RunLengthVector& u, const RunLengthVector& v,
    const ErrorBudget& budget, std::uint64_t max_states = kDefaultWorkBound) {
  if (u.size() != v.size()) {
    throw InvalidInput("run-length vectors have different lengths");
  }
  std::vector<RunLengthVector> out;
  enumerate_asymmetric_ball(
      AsymmetricBallQuery{u, budget},
      [&](const RunLengthVector& w) {
        if (contains(v, w, budget)) out.push_back(w);
        return true;
      },
      max_states);
  return out;
}

inline BigInt intersection_size_brute(const RunLengthVector& u,
                                      const RunLengthVector& v,
                                      const ErrorBudget& budget,
                                      std::uint64_t max_states = kDefaultWorkBound) {
  if (u.size() != v.size()) {
    throw InvalidInput("run-length vectors have different lengths");
  }
  BigInt count = 0;
  enumerate_asymmetric_ball(
      AsymmetricBallQuery{u, budget},
      [&](const RunLengthVector& w) {
        if (contains(v, w, budget)) ++count;
        return true;
      },
      max_states);
  return count;
}

// The two centers achieving the maximal ball intersection: they differ only
// in their first two entries, swapped, with a `surplus` parameter on the
// third run. Defined for r >= 3.
struct WorstCasePair {
  RunLengthVector first_center;
  RunLengthVector second_center;
  std::int64_t surplus;
};

inline WorstCasePair worst_case_pair(const ErrorBudget& budget,
                                     std::int64_t run_count,
                                     std::int64_t surplus) {
  if (run_count < 3) {
    throw InvalidInput("worst-case pair needs at least three runs");
  }
  if (surplus < 1) {
    throw InvalidInput("surplus must be positive");
  }
  const std::int64_t s = budget.deletions();
  std::vector<RunLength> u(static_cast<std::size_t>(run_count), s + 1);
  u[0] = s + 2;
  u[1] = s + 1;
  u[2] = s + surplus;
  std::vector<RunLength> v = u;
  v[0] = s + 1;
  v[1] = s + 2;
  return WorstCasePair{RunLengthVector(std::move(u)),
                       RunLengthVector(std::move(v)), surplus};
}

}  // namespace stickyinsdel
