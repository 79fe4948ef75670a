#pragma once

// SAGS code construction over P^1. The generator matrix evaluates the k = f+r
// monomial sections at the s*r chosen points. The parity-check matrix is
// built structurally from the dual scroll: its rows evaluate the sections
// g = (g_1,..,g_r), deg g_j <= s-2-e_j, against the dual covectors B_i^{-T},
// scaled per fiber by 1/P_D'(x_i) where P_D(z) = prod_i (z - x_i). With that
// residue normalization R*G^T = 0 exactly: each pairing is a total residue
// of a differential g_j f_j dz / P_D with deg(g_j f_j) <= s-2. The
// normalization pins the otherwise-free scalar of the duality pairing to 1
// under the convention [dz/(z-x)] -> 1.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sags/scroll.hpp"

namespace sags {

namespace detail {

// P_D'(x_i) = prod_{l != i} (x_i - x_l); nonzero since points are distinct.
inline std::vector<Fel> divisor_derivative_values(const Field& f, const std::vector<Fel>& points) {
  std::vector<Fel> out(points.size(), f.one());
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t l = 0; l < points.size(); ++l)
      if (l != i) out[i] = f.mul(out[i], f.sub(points[i], points[l]));
  return out;
}

}  // namespace detail

// Generator-style evaluation matrix: one row per basis section of spec,
// columns fiber-major over es. No rank or admissibility checks.
inline Matrix evaluation_matrix(const ScrollSpec& spec, const EvaluationSet& es) {
  std::vector<Section> basis = section_basis(spec);
  Matrix g(spec.field(), basis.size(), es.fiber_count() * spec.rank());
  for (size_t m = 0; m < basis.size(); ++m) g.set_row(m, evaluate(spec, basis[m], es));
  return g;
}

// Dual-scroll section basis in the component order of the primal scroll
// (component j has degree bound s-2-e_j), component-major then degree.
// This is the row order of the parity-check matrix.
inline std::vector<Section> dual_section_basis_natural(const ScrollSpec& spec, size_t s) {
  const Field& f = spec.field();
  const size_t r = spec.rank();
  std::vector<Section> out;
  for (size_t j = 0; j < r; ++j) {
    const int deg = static_cast<int>(s) - 2 - spec.exponents()[j];
    for (int t = 0; t <= deg; ++t) {
      Section sec;
      sec.components.resize(r);
      for (size_t l = 0; l < r; ++l) {
        const int dl = static_cast<int>(s) - 2 - spec.exponents()[l];
        sec.components[l].assign(static_cast<size_t>(dl) + 1, f.zero());
      }
      sec.components[j][static_cast<size_t>(t)] = f.one();
      out.push_back(std::move(sec));
    }
  }
  return out;
}

inline Matrix build_parity(const ScrollSpec& spec, const EvaluationSet& es) {
  const Field& f = spec.field();
  const size_t r = spec.rank();
  const size_t s = es.fiber_count();
  if (static_cast<int>(s) < spec.exponents().front() + 2)
    throw std::invalid_argument("need s >= e_1 + 2 fibers to build the parity matrix");
  const std::vector<Fel> pd = detail::divisor_derivative_values(f, es.points());
  std::vector<Fel> scale(s);
  for (size_t i = 0; i < s; ++i) scale[i] = f.inv(pd[i]);
  std::vector<Matrix> dual_bases;  // B_i^{-T}
  dual_bases.reserve(s);
  for (const Matrix& b : es.bases()) dual_bases.push_back(transpose(inverse(b)));
  std::vector<Section> duals = dual_section_basis_natural(spec, s);
  Matrix parity(f, duals.size(), s * r);
  std::vector<Fel> val(r);
  for (size_t n = 0; n < duals.size(); ++n) {
    for (size_t i = 0; i < s; ++i) {
      for (size_t j = 0; j < r; ++j) val[j] = poly_eval(f, duals[n].components[j], es.points()[i]);
      for (size_t j = 0; j < r; ++j) {
        Fel acc = f.zero();
        for (size_t l = 0; l < r; ++l) acc = f.add(acc, f.mul(dual_bases[i].at(j, l), val[l]));
        parity.at(n, i * r + j) = f.mul(scale[i], acc);
      }
    }
  }
  return parity;
}

struct SagsCode {
  ScrollSpec scroll;
  EvaluationSet es;
  Matrix G;  // k x n
  Matrix R;  // (n-k) x n
  size_t n, k;
  int designed_guarantee;  // s - 2 - e_1 (may be <= 0; reported, never asserted positive)
  bool sags_inequality;    // -2r < f < rs

  size_t fiber_count() const { return es.fiber_count(); }
  size_t fiber_rank() const { return scroll.rank(); }
};

inline SagsCode build_code(const ScrollSpec& spec, const EvaluationSet& es) {
  const Field& f = spec.field();
  if (f != es.field()) throw std::invalid_argument("scroll and evaluation set field mismatch");
  if (!spec.very_ample()) throw std::invalid_argument("scroll exponents must all be >= 1");
  if (es.fiber_rank() != spec.rank()) throw std::invalid_argument("evaluation set rank mismatch");
  const size_t s = es.fiber_count();
  const int e1 = spec.exponents().front();
  if (static_cast<int>(s) < e1 + 2)
    throw std::invalid_argument("need s >= e_1 + 2 fibers (SAGS regime)");

  Matrix g = evaluation_matrix(spec, es);
  Matrix parity = build_parity(spec, es);
  const size_t n = s * spec.rank();
  const size_t k = static_cast<size_t>(spec.section_dim());
  if (rank_of(g) != k) throw std::logic_error("generator matrix is rank deficient");
  if (parity.rows() != n - k || rank_of(parity) != n - k)
    throw std::logic_error("parity matrix has wrong rank");

  // Exactness guard: every parity row must annihilate every generator row.
  Matrix prod = mat_mul(parity, transpose(g));
  for (size_t i = 0; i < prod.rows(); ++i)
    for (size_t j = 0; j < prod.cols(); ++j)
      if (prod.at(i, j) != f.zero()) throw std::logic_error("parity-generator orthogonality failed");

  // Each fiber block of R must span an r-dimensional slice of the syndrome
  // space; intra-fiber solving relies on it.
  for (size_t i = 0; i < s; ++i) {
    std::vector<size_t> cols;
    for (size_t j = 0; j < spec.rank(); ++j) cols.push_back(i * spec.rank() + j);
    if (rank_of(submatrix_cols(parity, cols)) != spec.rank())
      throw std::logic_error("fiber block of parity matrix is rank deficient");
  }

  const int r = static_cast<int>(spec.rank());
  const int fdeg = spec.degree();
  SagsCode code{spec,
                es,
                std::move(g),
                std::move(parity),
                n,
                k,
                static_cast<int>(s) - 2 - e1,
                (-2 * r < fdeg) && (fdeg < r * static_cast<int>(s))};
  return code;
}

inline std::vector<Fel> encode(const SagsCode& code, const std::vector<Fel>& message) {
  if (message.size() != code.k) throw std::invalid_argument("message length must equal k");
  return vec_mat(message, code.G);
}

namespace detail {

// Advances c (strictly increasing indices into 0..n-1) to the next
// combination in lexicographic order; false once exhausted.
inline bool next_combination(std::vector<size_t>& c, size_t n) {
  const size_t m = c.size();
  size_t i = m;
  while (i-- > 0) {
    if (c[i] < n - m + i) {
      ++c[i];
      for (size_t l = i + 1; l < m; ++l) c[l] = c[l - 1] + 1;
      return true;
    }
  }
  return false;
}

inline uint64_t pow_guarded(uint64_t base, size_t exp, uint64_t guard) {
  uint64_t v = 1;
  for (size_t i = 0; i < exp; ++i) {
    if (v > guard / base) return guard + 1;
    v *= base;
  }
  return v;
}

// Walks all q^k - 1 nonzero messages in odometer order, keeping the codeword
// updated incrementally; calls fn(word) for each.
template <class Fn>
void for_each_nonzero_codeword(const Matrix& g, Fn&& fn) {
  const Field& f = g.field();
  const uint64_t q = f.order();
  const size_t k = g.rows(), n = g.cols();
  // step[j][v]: row j times (elem(v+1) - elem(v)); wrap[j]: row j times
  // (elem(0) - elem(q-1)).
  std::vector<std::vector<std::vector<Fel>>> step(k);
  std::vector<std::vector<Fel>> wrap(k);
  for (size_t j = 0; j < k; ++j) {
    step[j].resize(q - 1);
    for (uint64_t v = 0; v + 1 < q; ++v) {
      Fel d = f.sub(f.element(v + 1), f.element(v));
      step[j][v].resize(n);
      for (size_t c = 0; c < n; ++c) step[j][v][c] = f.mul(d, g.at(j, c));
    }
    Fel dw = f.sub(f.element(0), f.element(q - 1));
    wrap[j].resize(n);
    for (size_t c = 0; c < n; ++c) wrap[j][c] = f.mul(dw, g.at(j, c));
  }
  std::vector<uint64_t> digits(k, 0);
  std::vector<Fel> word(n, f.zero());
  for (;;) {
    size_t pos = 0;
    while (pos < k && digits[pos] == q - 1) {
      digits[pos] = 0;
      for (size_t c = 0; c < n; ++c) word[c] = f.add(word[c], wrap[pos][c]);
      ++pos;
    }
    if (pos == k) break;  // wrapped around to the zero message
    const std::vector<Fel>& delta = step[pos][digits[pos]];
    ++digits[pos];
    for (size_t c = 0; c < n; ++c) word[c] = f.add(word[c], delta[c]);
    fn(static_cast<const std::vector<Fel>&>(word));
  }
}

}  // namespace detail

inline int min_distance_bruteforce(const SagsCode& code, uint64_t guard = 10000000) {
  if (detail::pow_guarded(code.G.field().order(), code.k, guard) > guard)
    throw guard_exceeded("message space too large for brute-force distance");
  size_t best = code.n + 1;
  detail::for_each_nonzero_codeword(code.G, [&](const std::vector<Fel>& w) {
    size_t wt = hamming_weight(w);
    if (wt < best) best = wt;
  });
  return static_cast<int>(best);
}

// Generalized Hamming weights d_1..d_up_to: d_i = n - (maximum number of
// coordinates on which some i-dimensional subcode vanishes). Subcodes are
// enumerated through message subspaces in reduced-echelon canonical form,
// each exactly once.
inline std::vector<int> weight_hierarchy_bruteforce(const SagsCode& code, size_t up_to,
                                                    uint64_t guard = 10000000) {
  const Field& f = code.G.field();
  const uint64_t q = f.order();
  const size_t k = code.k;
  if (up_to > k) throw std::invalid_argument("hierarchy depth exceeds code dimension");
  if (detail::pow_guarded(q, k, guard) > guard)
    throw guard_exceeded("message space too large for weight hierarchy");
  std::vector<int> hierarchy;
  for (size_t dim = 1; dim <= up_to; ++dim) {
    size_t max_zero = 0;
    std::vector<size_t> piv(dim);  // pivot columns of the echelon basis
    for (size_t i = 0; i < dim; ++i) piv[i] = i;
    do {
      // free entries: row a, message-col b with b > piv[a], b not a pivot
      std::vector<std::pair<size_t, size_t>> free_pos;
      for (size_t a = 0; a < dim; ++a)
        for (size_t b = piv[a] + 1; b < k; ++b)
          if (std::find(piv.begin(), piv.end(), b) == piv.end()) free_pos.emplace_back(a, b);
      std::vector<uint64_t> odo(free_pos.size(), 0);
      for (;;) {
        Matrix basis(f, dim, k);
        for (size_t a = 0; a < dim; ++a) basis.at(a, piv[a]) = f.one();
        for (size_t t = 0; t < free_pos.size(); ++t)
          basis.at(free_pos[t].first, free_pos[t].second) = f.element(odo[t]);
        // support of the subcode = union of supports of its basis codewords
        std::vector<bool> hit(code.n, false);
        for (size_t a = 0; a < dim; ++a) {
          std::vector<Fel> w = vec_mat(basis.row(a), code.G);
          for (size_t c = 0; c < code.n; ++c)
            if (w[c] != f.zero()) hit[c] = true;
        }
        size_t zeros = 0;
        for (size_t c = 0; c < code.n; ++c)
          if (!hit[c]) ++zeros;
        if (zeros > max_zero) max_zero = zeros;
        size_t t = 0;
        while (t < odo.size() && odo[t] == q - 1) odo[t++] = 0;
        if (t == odo.size()) break;
        ++odo[t];
      }
    } while (detail::next_combination(piv, k));
    hierarchy.push_back(static_cast<int>(code.n - max_zero));
  }
  return hierarchy;
}

struct DualCheckResult {
  bool ok;
  std::vector<Fel> scaling;  // per-coordinate witness: 1/P_D'(x_i), repeated r times
  std::string diagnostics;
};

// Rebuilds the code as a SAGS code on the dual scroll and verifies that the
// scaled dual generator spans the same row space as R. Dual covectors are
// B_i^{-T}; because dual_scroll reports its exponents sorted (reversing the
// natural component order), the covector matrix is expressed in that sorted
// frame by reversing columns.
inline DualCheckResult dual_code_check(const SagsCode& code) {
  const Field& f = code.scroll.field();
  const size_t r = code.scroll.rank();
  const size_t s = code.es.fiber_count();
  ScrollSpec dual = dual_scroll(code.scroll, s);
  std::vector<Matrix> dual_bases;
  dual_bases.reserve(s);
  for (const Matrix& b : code.es.bases()) {
    Matrix bt = transpose(inverse(b));
    Matrix rev(f, r, r);
    for (size_t i = 0; i < r; ++i)
      for (size_t j = 0; j < r; ++j) rev.at(i, j) = bt.at(i, r - 1 - j);
    dual_bases.push_back(std::move(rev));
  }
  EvaluationSet dual_es(f, code.es.points(), std::move(dual_bases));
  Matrix dual_gen = evaluation_matrix(dual, dual_es);

  const std::vector<Fel> pd = detail::divisor_derivative_values(f, code.es.points());
  std::vector<Fel> scaling(code.n);
  Matrix scaled = dual_gen;
  for (size_t i = 0; i < s; ++i) {
    Fel w = f.inv(pd[i]);
    for (size_t j = 0; j < r; ++j) {
      scaling[i * r + j] = w;
      for (size_t row = 0; row < scaled.rows(); ++row)
        scaled.at(row, i * r + j) = f.mul(w, scaled.at(row, i * r + j));
    }
  }
  if (!same_row_space(scaled, code.R))
    return DualCheckResult{false, scaling, "scaled dual generator row space differs from R"};
  return DualCheckResult{true, scaling, ""};
}

// Section 6 style variant: the code defined by a parity matrix of raw
// dual-section evaluations at arbitrarily chosen affine scroll points (no
// r-per-fiber structure, no residue scaling).
struct ParityDefinedCode {
  ScrollSpec dual;
  Matrix parity;  // rows: dual section basis; columns: the chosen points
  Matrix kernel;  // rows span the code
  size_t length;
};

inline ParityDefinedCode parity_defined_code(const ScrollSpec& dual_spec,
                                             const std::vector<ScrollPoint>& points) {
  if (points.empty()) throw std::invalid_argument("need at least one point");
  const Field& f = dual_spec.field();
  const size_t r = dual_spec.rank();
  std::vector<Section> basis = section_basis(dual_spec);
  Matrix parity(f, basis.size(), points.size());
  std::vector<Fel> val(r);
  for (size_t p = 0; p < points.size(); ++p) {
    const ScrollPoint& pt = points[p];
    if (pt.at_infinity) throw std::invalid_argument("points must lie over affine fiber coordinates");
    if (pt.direction.size() != r) throw std::invalid_argument("point direction has wrong rank");
    for (size_t n = 0; n < basis.size(); ++n) {
      Fel acc = f.zero();
      for (size_t j = 0; j < r; ++j)
        acc = f.add(acc, f.mul(pt.direction[j], poly_eval(f, basis[n].components[j], pt.fiber)));
      parity.at(n, p) = acc;
    }
  }
  Matrix kernel = kernel_basis(parity);
  return ParityDefinedCode{dual_spec, std::move(parity), std::move(kernel), points.size()};
}

// Brute-force minimum distance of the span of `gen`'s rows (used for the
// parity-defined variant; returns length+1 for the zero code).
inline int min_distance_of_span(const Matrix& gen, uint64_t guard = 10000000) {
  RrefResult r = rref(gen);
  if (r.rank == 0) return static_cast<int>(gen.cols()) + 1;
  Matrix basis(gen.field(), r.rank, gen.cols());
  for (size_t i = 0; i < r.rank; ++i) basis.set_row(i, r.reduced.row(i));
  if (detail::pow_guarded(gen.field().order(), r.rank, guard) > guard)
    throw guard_exceeded("span too large for brute-force distance");
  size_t best = gen.cols() + 1;
  detail::for_each_nonzero_codeword(basis, [&](const std::vector<Fel>& w) {
    size_t wt = hamming_weight(w);
    if (wt < best) best = wt;
  });
  return static_cast<int>(best);
}

}  // namespace sags
