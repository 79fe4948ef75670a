#pragma once

// Rational normal scrolls P(E) over the projective line, E = O(e_1) + ... + O(e_r).
// Sections are stored in the affine chart as r polynomials f_j(z) with
// deg f_j <= e_j; all evaluation data lives over affine points of P^1, so the
// chosen fibers are indexed by distinct elements x_1..x_s of the field.
//
// Fiber bases are covector matrices: row j of B_i is the covector e*_{i,j}
// picking coordinate (i,j), and the corresponding fiber vectors e_{i,j} are
// the columns of B_i^{-1}.

#include <cstdint>
#include <random>
#include <vector>

#include "sags/linalg.hpp"

namespace sags {

namespace detail {

// Deterministic uniform draw in [0, n) from any 64-bit generator, by
// rejection; avoids the implementation-defined std::uniform_int_distribution.
template <class Rng>
uint64_t uniform_below(Rng& rng, uint64_t n) {
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  for (;;) {
    uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

inline uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  // splitmix64 step over seed+stream; gives independent substreams.
  uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

class ScrollSpec {
 public:
  // exponents must be non-increasing and >= 0. Exponent 0 summands arise on
  // dual scrolls at the boundary s = e_1 + 2; SAGS construction itself
  // additionally requires e_r >= 1 (see build_code).
  ScrollSpec(Field field, std::vector<int> exponents)
      : field_(std::move(field)), exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("scroll needs at least one exponent");
    for (size_t j = 0; j < exponents_.size(); ++j) {
      if (exponents_[j] < 0) throw std::invalid_argument("scroll exponents must be >= 0");
      if (j > 0 && exponents_[j] > exponents_[j - 1])
        throw std::invalid_argument("scroll exponents must be non-increasing");
    }
  }

  const Field& field() const { return field_; }
  const std::vector<int>& exponents() const { return exponents_; }
  size_t rank() const { return exponents_.size(); }
  int degree() const {
    int f = 0;
    for (int e : exponents_) f += e;
    return f;
  }
  int section_dim() const { return degree() + static_cast<int>(rank()); }  // k = f + r
  bool very_ample() const { return exponents_.back() >= 1; }

  friend bool operator==(const ScrollSpec& a, const ScrollSpec& b) {
    return a.field_ == b.field_ && a.exponents_ == b.exponents_;
  }
  friend bool operator!=(const ScrollSpec& a, const ScrollSpec& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<int> exponents_;
};

// One global section of O_{PE}(1): r component polynomials, deg f_j <= e_j,
// little-endian coefficients (size e_j + 1, zero-padded).
struct Section {
  std::vector<std::vector<Fel>> components;
};

inline Fel poly_eval(const Field& f, const std::vector<Fel>& coeffs, Fel x) {
  Fel acc = f.zero();
  for (size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

// The k = f + r monomial sections, component-major then degree:
// (1,0,..), (z,0,..), ..., (z^{e_1},0,..), (0,1,..), ...
inline std::vector<Section> section_basis(const ScrollSpec& spec) {
  std::vector<Section> out;
  const Field& f = spec.field();
  for (size_t j = 0; j < spec.rank(); ++j) {
    for (int t = 0; t <= spec.exponents()[j]; ++t) {
      Section s;
      s.components.resize(spec.rank());
      for (size_t l = 0; l < spec.rank(); ++l)
        s.components[l].assign(static_cast<size_t>(spec.exponents()[l]) + 1, f.zero());
      s.components[j][static_cast<size_t>(t)] = f.one();
      out.push_back(std::move(s));
    }
  }
  return out;
}

class EvaluationSet {
 public:
  // points: distinct affine fiber coordinates x_1..x_s; bases: invertible
  // r x r covector matrices, one per fiber.
  EvaluationSet(Field field, std::vector<Fel> points, std::vector<Matrix> bases)
      : field_(std::move(field)), points_(std::move(points)), bases_(std::move(bases)) {
    if (points_.empty()) throw std::invalid_argument("evaluation set needs at least one fiber");
    if (points_.size() != bases_.size())
      throw std::invalid_argument("one fiber basis required per point");
    for (size_t i = 0; i < points_.size(); ++i)
      for (size_t l = i + 1; l < points_.size(); ++l)
        if (points_[i] == points_[l]) throw std::invalid_argument("fiber points must be distinct");
    const size_t r = bases_[0].rows();
    for (const Matrix& b : bases_) {
      if (b.field() != field_) throw std::invalid_argument("fiber basis over wrong field");
      if (b.rows() != r || b.cols() != r) throw std::invalid_argument("fiber bases must be square of equal size");
      if (rank_of(b) != r) throw std::invalid_argument("fiber basis is singular");
    }
  }

  const Field& field() const { return field_; }
  const std::vector<Fel>& points() const { return points_; }
  const std::vector<Matrix>& bases() const { return bases_; }
  size_t fiber_count() const { return points_.size(); }
  size_t fiber_rank() const { return bases_[0].rows(); }

 private:
  Field field_;
  std::vector<Fel> points_;
  std::vector<Matrix> bases_;
};

// Codeword coordinates of one section, fiber-major: position (i,j) holds
// row j of B_i applied to the value vector (f_1(x_i), ..., f_r(x_i)).
inline std::vector<Fel> evaluate(const ScrollSpec& spec, const Section& section,
                                 const EvaluationSet& es) {
  if (spec.field() != es.field()) throw std::invalid_argument("section and evaluation set field mismatch");
  const size_t r = spec.rank();
  if (section.components.size() != r || es.fiber_rank() != r)
    throw std::invalid_argument("rank mismatch between scroll, section and evaluation set");
  const Field& f = spec.field();
  std::vector<Fel> out;
  out.reserve(es.fiber_count() * r);
  std::vector<Fel> val(r);
  for (size_t i = 0; i < es.fiber_count(); ++i) {
    for (size_t j = 0; j < r; ++j) val[j] = poly_eval(f, section.components[j], es.points()[i]);
    for (size_t j = 0; j < r; ++j) {
      Fel acc = f.zero();
      for (size_t l = 0; l < r; ++l) acc = f.add(acc, f.mul(es.bases()[i].at(j, l), val[l]));
      out.push_back(acc);
    }
  }
  return out;
}

// Scroll of the dual code: exponents s-2-e_j, reported sorted non-increasing.
// Requires s >= e_1 + 2 so that every dual exponent is >= 0.
inline ScrollSpec dual_scroll(const ScrollSpec& spec, size_t s) {
  const int e1 = spec.exponents().front();
  if (static_cast<int>(s) < e1 + 2)
    throw std::invalid_argument("need s >= e_1 + 2 fibers for the dual scroll");
  std::vector<int> dual;
  dual.reserve(spec.rank());
  for (size_t j = spec.rank(); j-- > 0;) dual.push_back(static_cast<int>(s) - 2 - spec.exponents()[j]);
  return ScrollSpec(spec.field(), std::move(dual));
}

// Walks every fiber over P^1(F_q) (affine points plus infinity) and every
// projective direction (canonical representatives: first nonzero coordinate
// scaled to 1). The closed-form count is (q+1)(q^{r-1} + ... + q + 1).
inline uint64_t count_rational_points(const ScrollSpec& spec, uint64_t guard = 1000000) {
  const uint64_t q = spec.field().order();
  const size_t r = spec.rank();
  uint64_t per_fiber_bound = 1;
  for (size_t i = 0; i + 1 < r; ++i) per_fiber_bound *= q;
  if (per_fiber_bound * (q + 1) > guard)
    throw guard_exceeded("rational point enumeration exceeds guard");
  uint64_t total = 0;
  for (uint64_t fiber = 0; fiber < q + 1; ++fiber) {  // q affine points and infinity
    for (size_t lead = 0; lead < r; ++lead) {
      // directions (0,..,0,1,*,..,*): q^(r-1-lead) of them
      uint64_t free_count = 1;
      for (size_t i = lead + 1; i < r; ++i) free_count *= q;
      for (uint64_t idx = 0; idx < free_count; ++idx) ++total;
    }
  }
  return total;
}

enum class BasisMode { identity, random };

// Builds the evaluation data for the given fiber points. identity mode is
// the directrix choice (coordinate covectors in every fiber); random mode
// draws uniformly random invertible matrices, reproducible per seed.
inline EvaluationSet standard_fiber_bases(const ScrollSpec& spec, std::vector<Fel> points,
                                          BasisMode mode, uint64_t seed = 0) {
  const Field& f = spec.field();
  const size_t r = spec.rank();
  std::vector<Matrix> bases;
  bases.reserve(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    if (mode == BasisMode::identity) {
      bases.push_back(Matrix::identity(f, r));
    } else {
      std::mt19937_64 rng(detail::mix_seed(seed, i));
      for (;;) {
        Matrix b(f, r, r);
        for (size_t a = 0; a < r; ++a)
          for (size_t c = 0; c < r; ++c)
            b.at(a, c) = Fel{static_cast<uint32_t>(detail::uniform_below(rng, f.order()))};
        if (rank_of(b) == r) {
          bases.push_back(std::move(b));
          break;
        }
      }
    }
  }
  return EvaluationSet(f, std::move(points), std::move(bases));
}

// A rational point of the scroll: fiber coordinate (affine or infinity) and
// a projective direction covector, canonicalized so the first nonzero
// coordinate is 1.
struct ScrollPoint {
  bool at_infinity = false;
  Fel fiber{0};
  std::vector<Fel> direction;

  ScrollPoint(const Field& f, Fel fiber_coord, std::vector<Fel> dir)
      : at_infinity(false), fiber(fiber_coord), direction(std::move(dir)) {
    canonicalize(f);
  }
  ScrollPoint(const Field& f, std::vector<Fel> dir)  // point on the fiber over infinity
      : at_infinity(true), direction(std::move(dir)) {
    canonicalize(f);
  }

  friend bool operator==(const ScrollPoint& a, const ScrollPoint& b) {
    return a.at_infinity == b.at_infinity && (a.at_infinity || a.fiber == b.fiber) &&
           a.direction == b.direction;
  }

 private:
  void canonicalize(const Field& f) {
    size_t lead = direction.size();
    for (size_t i = 0; i < direction.size(); ++i)
      if (direction[i] != f.zero()) {
        lead = i;
        break;
      }
    if (lead == direction.size())
      throw std::invalid_argument("scroll point direction must be nonzero");
    Fel scale = f.inv(direction[lead]);
    for (auto& d : direction) d = f.mul(scale, d);
  }
};

}  // namespace sags
