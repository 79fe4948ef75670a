#pragma once

// Shared test utilities: the random code-spec distribution used by the
// property tests and acceptance criteria, plus small independent oracles
// that deliberately avoid the library's own code paths.

#include <algorithm>
#include <random>
#include <vector>

#include "sags/sags.hpp"

namespace sags::testutil {

inline std::vector<Field> acceptance_fields() {
  return {Field(2, 2, {1, 1, 1}),     // GF(4)
          Field(5, 1, {0, 1}),        // GF(5)
          Field(7, 1, {0, 1}),        // GF(7)
          Field(2, 3, {1, 1, 0, 1}),  // GF(8)
          Field(3, 2, {1, 0, 1})};    // GF(9)
}

inline std::vector<Fel> first_points(const Field& f, size_t s) {
  std::vector<Fel> pts;
  for (size_t i = 0; i < s; ++i) pts.push_back(f.element(i));
  return pts;
}

inline std::vector<Fel> random_distinct_points(const Field& f, size_t s, std::mt19937_64& rng) {
  std::vector<Fel> pool = f.elements();
  std::vector<Fel> pts;
  for (size_t i = 0; i < s; ++i) {
    size_t pick = rng() % pool.size();
    pts.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<long>(pick));
  }
  return pts;
}

// Samples the criterion-1 distribution: q in {4,5,7,8,9}, r <= 3, e_1 <= 3,
// e_1+2 <= s <= q, identity or random bases, random point sets.
inline SagsCode random_code(std::mt19937_64& rng) {
  const auto fields = acceptance_fields();
  for (;;) {
    const Field& f = fields[rng() % fields.size()];
    const size_t r = 1 + rng() % 3;
    std::vector<int> exps(r);
    for (auto& e : exps) e = 1 + static_cast<int>(rng() % 3);
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    const int e1 = exps.front();
    if (static_cast<uint64_t>(e1) + 2 > f.order()) continue;
    const size_t smin = static_cast<size_t>(e1) + 2;
    const size_t s = smin + rng() % (f.order() - smin + 1);
    ScrollSpec spec(f, exps);
    auto pts = random_distinct_points(f, s, rng);
    BasisMode mode = (rng() % 2) ? BasisMode::random : BasisMode::identity;
    auto es = standard_fiber_bases(spec, pts, mode, rng());
    return build_code(spec, es);
  }
}

inline std::vector<Fel> random_word(const Field& f, size_t len, std::mt19937_64& rng) {
  std::vector<Fel> w(len);
  for (auto& x : w) x = f.element(rng() % f.order());
  return w;
}

// Independent minimum-distance oracle: recursive message enumeration with a
// from-scratch encode per message. No shared code with the library's
// incremental enumeration.
inline void naive_min_distance_rec(const Matrix& g, std::vector<Fel>& msg, size_t pos,
                                   size_t& best) {
  const Field& f = g.field();
  if (pos == g.rows()) {
    bool zero = true;
    for (Fel m : msg)
      if (m != f.zero()) zero = false;
    if (zero) return;
    size_t weight = 0;
    for (size_t c = 0; c < g.cols(); ++c) {
      Fel acc = f.zero();
      for (size_t j = 0; j < g.rows(); ++j) acc = f.add(acc, f.mul(msg[j], g.at(j, c)));
      if (acc != f.zero()) ++weight;
    }
    if (weight < best) best = weight;
    return;
  }
  for (uint64_t v = 0; v < f.order(); ++v) {
    msg[pos] = f.element(v);
    naive_min_distance_rec(g, msg, pos + 1, best);
  }
}

inline int naive_min_distance(const Matrix& g) {
  std::vector<Fel> msg(g.rows(), g.field().zero());
  size_t best = g.cols() + 1;
  naive_min_distance_rec(g, msg, 0, best);
  return static_cast<int>(best);
}

// Reed-Solomon oracle: the evaluation code of polynomials of degree <= deg
// at the given points, built directly as a Vandermonde matrix.
inline Matrix vandermonde_generator(const Field& f, int deg, const std::vector<Fel>& points) {
  Matrix g(f, static_cast<size_t>(deg) + 1, points.size());
  for (size_t c = 0; c < points.size(); ++c) {
    Fel xp = f.one();
    for (int t = 0; t <= deg; ++t) {
      g.at(static_cast<size_t>(t), c) = xp;
      xp = f.mul(xp, points[c]);
    }
  }
  return g;
}

}  // namespace sags::testutil
