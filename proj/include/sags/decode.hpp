#pragma once

// Two-step syndrome decoding. Step 1 locates the error-carrying fibers by
// exhaustive minimal-cardinality span search: the syndrome must lie in the
// column span of the parity blocks of the located fibers. Step 2 solves the
// restricted linear system for the intra-fiber error values. Within the
// fiber correction radius floor((s - e_1 - 1)/2) the location is unique and
// the restricted system has a unique solution.

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <vector>

#include "sags/code.hpp"

namespace sags {

inline std::vector<Fel> syndrome(const SagsCode& code, const std::vector<Fel>& received) {
  if (received.size() != code.n) throw std::invalid_argument("received word length must equal n");
  return mat_vec(code.R, received);
}

inline int fiber_correction_radius(const SagsCode& code) {
  const int s = static_cast<int>(code.fiber_count());
  const int e1 = code.scroll.exponents().front();
  const int a = (s - e1 - 1) / 2;
  return a < 0 ? 0 : a;
}

using FiberLocation = std::vector<size_t>;  // sorted fiber indices, 0-based

// All minimal-cardinality fiber subsets whose parity blocks span the
// syndrome, searched at a = 0, 1, ..., a_max in order and stopping at the
// first cardinality with a hit. Empty result: no location within a_max.
// At most sum_{a <= a_max} C(s, a) span tests are performed; the count is
// reported through span_tests.
inline std::vector<FiberLocation> locate_fibers(const SagsCode& code, const std::vector<Fel>& syn,
                                                size_t a_max, uint64_t* span_tests = nullptr) {
  const size_t s = code.fiber_count();
  const size_t r = code.fiber_rank();
  if (a_max > s) throw std::invalid_argument("a_max exceeds the number of fibers");
  if (syn.size() != code.n - code.k) throw std::invalid_argument("syndrome length must equal n-k");
  uint64_t tests = 0;
  std::vector<FiberLocation> hits;
  if (is_zero(syn)) {
    hits.push_back({});
  } else {
    for (size_t a = 1; a <= a_max && hits.empty(); ++a) {
      std::vector<size_t> subset(a);
      for (size_t i = 0; i < a; ++i) subset[i] = i;
      do {
        std::vector<size_t> cols;
        cols.reserve(a * r);
        for (size_t fiber : subset)
          for (size_t j = 0; j < r; ++j) cols.push_back(fiber * r + j);
        ++tests;
        if (in_span(submatrix_cols(code.R, cols), syn)) hits.push_back(subset);
      } while (detail::next_combination(subset, s));
    }
  }
  if (span_tests) *span_tests += tests;
  return hits;
}

struct FiberSolveResult {
  enum class Status { ok, ambiguous, no_solution };
  Status status;
  std::vector<Fel> error;  // length n, supported on the located fibers (when ok)
};

// Step 2: solve syn = R|_loc * e|_loc and embed the solution back into a
// full-length error vector.
inline FiberSolveResult solve_in_fibers(const SagsCode& code, const std::vector<Fel>& syn,
                                        const FiberLocation& loc) {
  const Field& f = code.scroll.field();
  if (loc.empty()) {
    if (is_zero(syn)) return {FiberSolveResult::Status::ok, std::vector<Fel>(code.n, f.zero())};
    return {FiberSolveResult::Status::no_solution, {}};
  }
  const size_t r = code.fiber_rank();
  std::vector<size_t> cols;
  for (size_t t = 0; t < loc.size(); ++t) {
    if (loc[t] >= code.fiber_count()) throw std::invalid_argument("fiber index out of range");
    if (t > 0 && loc[t] <= loc[t - 1])
      throw std::invalid_argument("fiber location must be sorted and duplicate-free");
    for (size_t j = 0; j < r; ++j) cols.push_back(loc[t] * r + j);
  }
  SolveResult sol = solve(submatrix_cols(code.R, cols), syn);
  if (sol.status == SolveResult::Status::no_solution)
    return {FiberSolveResult::Status::no_solution, {}};
  if (sol.status == SolveResult::Status::underdetermined)
    return {FiberSolveResult::Status::ambiguous, {}};
  std::vector<Fel> error(code.n, f.zero());
  for (size_t t = 0; t < cols.size(); ++t) error[cols[t]] = sol.x[t];
  return {FiberSolveResult::Status::ok, std::move(error)};
}

enum class DecodeStatus { corrected, ambiguous, undecodable };

struct DecodeResult {
  DecodeStatus status;
  std::vector<Fel> error;      // length n when corrected
  std::vector<Fel> corrected;  // received - error when corrected
  std::vector<FiberLocation> locations;
  uint64_t span_tests = 0;
};

inline DecodeResult decode(const SagsCode& code, const std::vector<Fel>& received,
                           std::optional<size_t> a_max_override = std::nullopt) {
  const Field& f = code.scroll.field();
  std::vector<Fel> syn = syndrome(code, received);
  size_t a_max = a_max_override.value_or(static_cast<size_t>(fiber_correction_radius(code)));
  if (a_max > code.fiber_count()) a_max = code.fiber_count();
  DecodeResult res;
  res.span_tests = 0;
  res.locations = locate_fibers(code, syn, a_max, &res.span_tests);
  if (res.locations.empty()) {
    res.status = DecodeStatus::undecodable;
    return res;
  }
  if (res.locations.size() > 1) {
    res.status = DecodeStatus::ambiguous;
    return res;
  }
  FiberSolveResult sol = solve_in_fibers(code, syn, res.locations.front());
  if (sol.status != FiberSolveResult::Status::ok) {
    res.status = sol.status == FiberSolveResult::Status::ambiguous ? DecodeStatus::ambiguous
                                                                   : DecodeStatus::undecodable;
    return res;
  }
  res.status = DecodeStatus::corrected;
  res.error = std::move(sol.error);
  res.corrected = vec_sub(f, received, res.error);
  return res;
}

struct ChannelModel {
  size_t fibers = 1;     // number of distinct error-carrying fibers per trial
  size_t per_fiber = 1;  // nonzero error values placed in each chosen fiber
  uint64_t seed = 0;
};

struct ChannelStats {
  uint64_t trials = 0;
  uint64_t corrected = 0;      // decoder returned the transmitted codeword
  uint64_t miscorrected = 0;   // decoder "corrected" to a different codeword
  uint64_t ambiguous = 0;
  uint64_t undecodable = 0;
  uint64_t total_span_tests = 0;

  double success_rate() const { return trials ? double(corrected) / double(trials) : 0.0; }
  double ambiguity_rate() const { return trials ? double(ambiguous) / double(trials) : 0.0; }
  double mean_span_tests() const { return trials ? double(total_span_tests) / double(trials) : 0.0; }
};

// Random codeword + random error in the model, decoded; deterministic per
// seed with an independent substream per trial.
inline ChannelStats simulate_channel(const SagsCode& code, uint64_t trials, const ChannelModel& model,
                                     std::ostream* trial_log = nullptr) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const Field& f = code.scroll.field();
  const size_t r = code.fiber_rank();
  const size_t s = code.fiber_count();
  if (model.fibers > s) throw std::invalid_argument("error model uses more fibers than the code has");
  if (model.fibers > 0 && (model.per_fiber < 1 || model.per_fiber > r))
    throw std::invalid_argument("per-fiber error count must be in 1..r");
  ChannelStats stats;
  stats.trials = trials;
  for (uint64_t t = 0; t < trials; ++t) {
    std::mt19937_64 rng(detail::mix_seed(model.seed, t));
    std::vector<Fel> message(code.k);
    for (auto& m : message) m = f.element(detail::uniform_below(rng, f.order()));
    std::vector<Fel> sent = encode(code, message);
    std::vector<Fel> received = sent;
    // choose model.fibers distinct fibers
    std::vector<size_t> all(s);
    for (size_t i = 0; i < s; ++i) all[i] = i;
    std::vector<size_t> chosen;
    for (size_t i = 0; i < model.fibers; ++i) {
      size_t pick = static_cast<size_t>(detail::uniform_below(rng, all.size()));
      chosen.push_back(all[pick]);
      all.erase(all.begin() + static_cast<long>(pick));
    }
    size_t weight = 0;
    for (size_t fiber : chosen) {
      std::vector<size_t> pos(r);
      for (size_t j = 0; j < r; ++j) pos[j] = j;
      for (size_t j = 0; j < model.per_fiber; ++j) {
        size_t pick = static_cast<size_t>(detail::uniform_below(rng, pos.size()));
        size_t coord = fiber * r + pos[pick];
        pos.erase(pos.begin() + static_cast<long>(pick));
        Fel val = f.element(1 + detail::uniform_below(rng, f.order() - 1));
        received[coord] = f.add(received[coord], val);
        ++weight;
      }
    }
    DecodeResult res = decode(code, received);
    stats.total_span_tests += res.span_tests;
    const char* outcome;
    if (res.status == DecodeStatus::corrected) {
      if (res.corrected == sent) {
        ++stats.corrected;
        outcome = "corrected";
      } else {
        ++stats.miscorrected;
        outcome = "miscorrected";
      }
    } else if (res.status == DecodeStatus::ambiguous) {
      ++stats.ambiguous;
      outcome = "ambiguous";
    } else {
      ++stats.undecodable;
      outcome = "undecodable";
    }
    if (trial_log) {
      *trial_log << "trial=" << t << " weight=" << weight << " fibers=" << chosen.size()
                 << " status=" << outcome << " span_tests=" << res.span_tests << '\n';
    }
  }
  return stats;
}

}  // namespace sags
