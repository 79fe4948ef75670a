#pragma once

// Syndromes as vector bundle extensions 0 -> H* -> W -> O -> 0 on P^1, with
// H* = O(e_1 - s) + ... + O(e_r - s). An error vector determines an
// H*-valued principal part p with simple poles on the chosen fibers; its
// cohomology class is the extension class of W. The splitting type of W is
// recovered from the section-count ladder m -> h0(W(m)):
//
//   h0(W(m)) = h0(H*(m)) + (m+1) - rank(coboundary at twist m)
//   #{t : a_t >= -m} = h0(W(m)) - h0(W(m-1))
//
// and the coboundary rank is an exact residue-pairing matrix rank over the
// field. Nothing here needs the parity matrix; only the principal part in
// the standard trivialization.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "sags/code.hpp"

namespace sags {

// H*-valued principal part with simple poles on the evaluation divisor:
// coefficient vector c_i per fiber, meaning sum_j c_{i,j} e_j / (z - x_i) in
// the standard trivialization of E.
struct PrincipalPart {
  std::vector<std::vector<Fel>> coeff;  // s entries of length r

  std::vector<size_t> support() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < coeff.size(); ++i)
      if (!is_zero(coeff[i])) out.push_back(i);
    return out;
  }
  bool zero() const { return support().empty(); }
};

// Pushes the error coordinates through B_i^{-1} into the standard
// trivialization: c_i = B_i^{-1} (lambda_{i,1}, ..., lambda_{i,r}).
inline PrincipalPart syndrome_to_principal_part(const SagsCode& code, const std::vector<Fel>& error) {
  if (error.size() != code.n) throw std::invalid_argument("error vector length must equal n");
  const size_t r = code.fiber_rank();
  PrincipalPart pp;
  pp.coeff.resize(code.fiber_count());
  for (size_t i = 0; i < code.fiber_count(); ++i) {
    Matrix binv = inverse(code.es.bases()[i]);
    std::vector<Fel> lambda(error.begin() + static_cast<long>(i * r),
                            error.begin() + static_cast<long>((i + 1) * r));
    pp.coeff[i] = mat_vec(binv, lambda);
  }
  return pp;
}

// Rank of the residue-pairing matrix of H0(O(m)) -> H1(H*(m)), f -> [f*p]:
// rows indexed by (component j, exponent t <= s - e_j - m - 2), columns by
// monomial exponents u <= m, entry sum_i c_{i,j} x_i^{t+u} / P_D'(x_i).
//
// The 1/P_D'(x_i) factor converts the coefficient c_i (a fiber value of E in
// the standard frame) into the residue of its principal part in the H* = E(-D)
// frame; it is the same normalization the parity matrix carries. Dropping it
// would make the rank depend on the chosen error representative: the
// principal part of a codeword (a global section t of E, poles spread over
// D) must pair to zero, which is the residue identity
// sum_i t_j(x_i) f(x_i) x_i^t / P_D'(x_i) = 0 for numerator degree <= s-2.
inline size_t coboundary_rank(const SagsCode& code, const PrincipalPart& pp, int m) {
  if (m < 0) throw std::invalid_argument("twist must be >= 0");
  if (pp.coeff.size() != code.fiber_count()) throw std::invalid_argument("principal part has wrong fiber count");
  const Field& f = code.scroll.field();
  const int s = static_cast<int>(code.fiber_count());
  const size_t r = code.fiber_rank();
  size_t rows = 0;
  for (size_t j = 0; j < r; ++j) {
    int tmax = s - code.scroll.exponents()[j] - m - 2;
    if (tmax >= 0) rows += static_cast<size_t>(tmax) + 1;
  }
  if (rows == 0) return 0;
  // power sums P_j(d) = sum_i c_{i,j} x_i^d / P_D'(x_i) for all needed d
  const int dmax = s - 2;  // t+u <= (s - e_j - m - 2) + m <= s - 2
  const std::vector<Fel> pd = detail::divisor_derivative_values(f, code.es.points());
  std::vector<std::vector<Fel>> psum(r, std::vector<Fel>(static_cast<size_t>(dmax) + 1, f.zero()));
  for (size_t i = 0; i < code.fiber_count(); ++i) {
    Fel x = code.es.points()[i];
    Fel xp = f.inv(pd[i]);
    for (int d = 0; d <= dmax; ++d) {
      for (size_t j = 0; j < r; ++j)
        if (pp.coeff[i][j] != f.zero()) psum[j][static_cast<size_t>(d)] =
            f.add(psum[j][static_cast<size_t>(d)], f.mul(pp.coeff[i][j], xp));
      xp = f.mul(xp, x);
    }
  }
  Matrix mat(f, rows, static_cast<size_t>(m) + 1);
  size_t row = 0;
  for (size_t j = 0; j < r; ++j) {
    int tmax = s - code.scroll.exponents()[j] - m - 2;
    for (int t = 0; t <= tmax; ++t, ++row)
      for (int u = 0; u <= m; ++u)
        mat.at(row, static_cast<size_t>(u)) = psum[j][static_cast<size_t>(t + u)];
  }
  return rank_of(mat);
}

// h0(W(m)) for the extension bundle classified by pp.
inline int h0_twist(const SagsCode& code, const PrincipalPart& pp, int m) {
  const int s = static_cast<int>(code.fiber_count());
  int h0_hstar = 0;
  for (int e : code.scroll.exponents()) h0_hstar += std::max(0, e - s + m + 1);
  return h0_hstar + (m + 1) - static_cast<int>(coboundary_rank(code, pp, m));
}

// Splitting type of W on P^1: the r+1 line bundle degrees, sorted
// non-increasing, summing to deg W = f - rs.
struct SplittingType {
  std::vector<int> degrees;

  friend bool operator==(const SplittingType& a, const SplittingType& b) {
    return a.degrees == b.degrees;
  }
  friend bool operator!=(const SplittingType& a, const SplittingType& b) { return !(a == b); }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < degrees.size(); ++i) {
      if (i) os << ',';
      os << degrees[i];
    }
    os << ')';
    return os.str();
  }
};

inline SplittingType splitting_type(const SagsCode& code, const PrincipalPart& pp) {
  const int s = static_cast<int>(code.fiber_count());
  const int r = static_cast<int>(code.fiber_rank());
  const int deg_w = code.scroll.degree() - r * s;
  // Ladder of first differences: #{t : a_t >= -m} = h0(W(m)) - h0(W(m-1)).
  // h0(W(-1)) = 0 because a_1 <= 0 (h0(H*) = 0 forces at most one section).
  std::vector<int> degrees;
  int h_prev = 0;
  int n_prev = 0;
  const int hard_stop = 4 * s + 4 * (r + 1) + 8;
  for (int m = 0;; ++m) {
    if (m > hard_stop) throw std::logic_error("splitting-type ladder failed to stabilize");
    int h = h0_twist(code, pp, m);
    int n_m = h - h_prev;
    if (n_m < n_prev || n_m > r + 1)
      throw std::logic_error("splitting-type ladder is not monotone");
    for (int c = 0; c < n_m - n_prev; ++c) degrees.push_back(-m);
    h_prev = h;
    n_prev = n_m;
    if (n_m == r + 1) break;
  }
  int sum = 0;
  for (int d : degrees) sum += d;
  if (sum != deg_w) throw std::logic_error("splitting type degrees do not sum to deg W");
  std::sort(degrees.begin(), degrees.end(), std::greater<int>());
  return SplittingType{std::move(degrees)};
}

// s_1(W) = deg W - (rank W) * (maximal line subbundle degree); on P^1 the
// maximal line subbundle degree of a split bundle is its top summand degree.
inline int s1_invariant(const SplittingType& st) {
  int sum = 0;
  for (int d : st.degrees) sum += d;
  return sum - static_cast<int>(st.degrees.size()) * st.degrees.front();
}

struct S1Report {
  SplittingType type;
  int s1 = 0;
  size_t fiber_count = 0;    // fibers with nonzero principal-part coefficients
  int bound = 0;             // (r+1)a - rs + f
  bool satisfied = false;    // s1 <= bound
  bool corollary_applies = false;    // a <= floor((rs - f) / (2r))
  bool corollary_satisfied = false;  // 2r*s1 < (r-1)(f - rs), strict
};

inline S1Report check_instability(const SagsCode& code, const std::vector<Fel>& error) {
  PrincipalPart pp = syndrome_to_principal_part(code, error);
  S1Report rep;
  rep.type = splitting_type(code, pp);
  rep.s1 = s1_invariant(rep.type);
  rep.fiber_count = pp.support().size();
  const int r = static_cast<int>(code.fiber_rank());
  const int s = static_cast<int>(code.fiber_count());
  const int fdeg = code.scroll.degree();
  const int a = static_cast<int>(rep.fiber_count);
  rep.bound = (r + 1) * a - r * s + fdeg;
  rep.satisfied = rep.s1 <= rep.bound;
  rep.corollary_applies = a <= (r * s - fdeg) / (2 * r);
  rep.corollary_satisfied = 2 * r * rep.s1 < (r - 1) * (fdeg - r * s);
  return rep;
}

}  // namespace sags
