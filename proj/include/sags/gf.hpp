#pragma once

// Exact arithmetic in GF(p^m), represented as GF(p)[x]/(modulus) for a monic
// irreducible modulus of degree m. Elements are stored by their canonical
// index in 0..q-1: the base-p numeral of the coefficient tuple
// (c_0 + c_1*p + ... + c_{m-1}*p^{m-1}). Index order doubles as the
// deterministic element order used by every enumeration in this library.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sags/errors.hpp"

namespace sags {

// One element of a Field, identified by canonical index. Plain value type;
// all arithmetic goes through the owning Field.
struct Fel {
  uint32_t v = 0;

  friend constexpr bool operator==(Fel a, Fel b) { return a.v == b.v; }
  friend constexpr bool operator!=(Fel a, Fel b) { return a.v != b.v; }
  friend constexpr bool operator<(Fel a, Fel b) { return a.v < b.v; }
};

namespace detail {

inline bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p): little-endian coefficient vectors, trimmed so the
// zero polynomial is the empty vector.
inline void poly_trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<uint32_t> poly_mod(std::vector<uint32_t> num,
                                      const std::vector<uint32_t>& den,
                                      uint32_t p) {
  // den must be nonzero; monic not required (we divide by the lead inverse).
  poly_trim(num);
  std::vector<uint32_t> d = den;
  poly_trim(d);
  if (d.empty()) throw std::invalid_argument("polynomial modulus is zero");
  const uint32_t lead = d.back();
  // lead^(p-2) mod p
  uint64_t lead_inv = 1, base = lead, e = p - 2;
  while (e) {
    if (e & 1) lead_inv = lead_inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  while (num.size() >= d.size()) {
    uint64_t factor = num.back() * lead_inv % p;
    if (factor != 0) {
      size_t shift = num.size() - d.size();
      for (size_t i = 0; i < d.size(); ++i) {
        uint64_t sub = factor * d[i] % p;
        uint64_t cur = num[shift + i];
        num[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
      }
    }
    num.pop_back();
    poly_trim(num);
    if (num.size() < d.size()) break;
  }
  return num;
}

inline bool poly_divides(const std::vector<uint32_t>& den,
                         const std::vector<uint32_t>& num, uint32_t p) {
  return poly_mod(num, den, p).empty();
}

// Trial division by every monic polynomial of degree 1..deg/2. Exact and
// plenty fast for the q <= 2^16 range this library supports.
inline bool poly_is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
  std::vector<uint32_t> g = f;
  poly_trim(g);
  if (g.size() < 2) return false;  // constants are not irreducible
  const size_t deg = g.size() - 1;
  for (size_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t idx = 0; idx < count; ++idx) {
      std::vector<uint32_t> div(d + 1, 0);
      uint64_t t = idx;
      for (size_t i = 0; i < d; ++i) {
        div[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      div[d] = 1;
      if (poly_divides(div, g, p)) return false;
    }
  }
  return true;
}

}  // namespace detail

class Field {
 public:
  // modulus: little-endian coefficients c_0..c_m of a monic irreducible
  // degree-m polynomial over GF(p). Coefficients are reduced mod p first.
  Field(uint32_t p, uint32_t m, std::vector<uint32_t> modulus)
      : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (modulus_.size() != static_cast<size_t>(m_) + 1)
      throw std::invalid_argument("modulus must have degree m (m+1 coefficients)");
    for (auto& c : modulus_) c %= p_;
    if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
    q_ = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      q_ *= p_;
      if (q_ > 65536) throw std::invalid_argument("field order above 2^16 is unsupported");
    }
    if (!detail::poly_is_irreducible(modulus_, p_))
      throw std::invalid_argument("modulus is reducible over GF(p)");
    // x^(m+t) mod modulus for t = 0..m-2, used to fold products back down.
    if (m_ > 1) {
      std::vector<uint32_t> power(m_, 0);  // x^m mod f, start from x^m
      for (uint32_t i = 0; i < m_; ++i)
        power[i] = (p_ - modulus_[i]) % p_;  // x^m = -(c_0 + ... + c_{m-1}x^{m-1})
      xred_.push_back(power);
      for (uint32_t t = 1; t + 1 < m_; ++t) {
        std::vector<uint32_t> next(m_, 0);  // multiply previous by x, reduce
        uint32_t carry = power[m_ - 1];
        for (uint32_t i = m_ - 1; i > 0; --i) next[i] = power[i - 1];
        next[0] = 0;
        for (uint32_t i = 0; i < m_; ++i)
          next[i] = (next[i] + static_cast<uint64_t>(carry) * xred_[0][i]) % p_;
        power = next;
        xred_.push_back(power);
      }
    }
  }

  // Descriptor grammar: "p^m/c0,c1,...,cm", or bare "p" for GF(p) with
  // modulus x.
  static Field parse(std::string_view text) {
    auto caret = text.find('^');
    if (caret == std::string_view::npos) {
      uint32_t p = parse_u32(text, "field characteristic");
      return Field(p, 1, {0, 1});
    }
    auto slash = text.find('/', caret);
    if (slash == std::string_view::npos)
      throw parse_error("field descriptor missing '/modulus': " + std::string(text));
    uint32_t p = parse_u32(text.substr(0, caret), "field characteristic");
    uint32_t m = parse_u32(text.substr(caret + 1, slash - caret - 1), "extension degree");
    std::vector<uint32_t> mod;
    std::string_view rest = text.substr(slash + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      mod.push_back(parse_u32(rest.substr(0, comma), "modulus coefficient"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return Field(p, m, std::move(mod));
  }

  std::string descriptor() const {
    std::ostringstream os;
    os << p_ << '^' << m_ << '/';
    for (uint32_t i = 0; i <= m_; ++i) {
      if (i) os << ',';
      os << modulus_[i];
    }
    return os.str();
  }

  uint32_t characteristic() const { return p_; }
  uint32_t degree() const { return m_; }
  uint64_t order() const { return q_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  Fel zero() const { return Fel{0}; }
  Fel one() const { return Fel{1}; }

  Fel element(uint64_t index) const {
    if (index >= q_) throw std::invalid_argument("element index out of range");
    return Fel{static_cast<uint32_t>(index)};
  }

  // All q elements in canonical order, zero first.
  std::vector<Fel> elements() const {
    std::vector<Fel> out;
    out.reserve(q_);
    for (uint64_t i = 0; i < q_; ++i) out.push_back(Fel{static_cast<uint32_t>(i)});
    return out;
  }

  std::vector<uint32_t> coeffs(Fel a) const {
    std::vector<uint32_t> c(m_);
    uint32_t v = a.v;
    for (uint32_t i = 0; i < m_; ++i) {
      c[i] = v % p_;
      v /= p_;
    }
    return c;
  }

  Fel from_coeffs(const std::vector<uint32_t>& c) const {
    if (c.size() > m_) {
      for (size_t i = m_; i < c.size(); ++i)
        if (c[i] % p_ != 0) throw std::invalid_argument("coefficient tuple too long");
    }
    uint32_t v = 0;
    for (uint32_t i = m_; i-- > 0;) v = v * p_ + (i < c.size() ? c[i] % p_ : 0);
    return Fel{v};
  }

  Fel add(Fel a, Fel b) const {
    check(a), check(b);
    if (m_ == 1) return Fel{(a.v + b.v) % p_};
    uint32_t out = 0, mul = 1, av = a.v, bv = b.v;
    for (uint32_t i = 0; i < m_; ++i) {
      out += (av % p_ + bv % p_) % p_ * mul;
      av /= p_, bv /= p_, mul *= p_;
    }
    return Fel{out};
  }

  Fel neg(Fel a) const {
    check(a);
    if (m_ == 1) return Fel{(p_ - a.v) % p_};
    uint32_t out = 0, mul = 1, av = a.v;
    for (uint32_t i = 0; i < m_; ++i) {
      out += (p_ - av % p_) % p_ * mul;
      av /= p_, mul *= p_;
    }
    return Fel{out};
  }

  Fel sub(Fel a, Fel b) const { return add(a, neg(b)); }

  Fel mul(Fel a, Fel b) const {
    check(a), check(b);
    if (m_ == 1) return Fel{static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % p_)};
    uint32_t da[kMaxDeg], db[kMaxDeg];
    uint64_t conv[2 * kMaxDeg - 1] = {0};
    decode(a.v, da), decode(b.v, db);
    for (uint32_t i = 0; i < m_; ++i) {
      if (da[i] == 0) continue;
      for (uint32_t j = 0; j < m_; ++j) conv[i + j] += static_cast<uint64_t>(da[i]) * db[j];
    }
    for (uint32_t t = 2 * m_ - 2; t >= m_; --t) {
      uint64_t c = conv[t] % p_;
      if (c)
        for (uint32_t i = 0; i < m_; ++i) conv[i] += c * xred_[t - m_][i];
      if (t == m_) break;
    }
    uint32_t out = 0, mul_ = 1;
    for (uint32_t i = 0; i < m_; ++i) {
      out += static_cast<uint32_t>(conv[i] % p_) * mul_;
      mul_ *= p_;
    }
    return Fel{out};
  }

  Fel pow(Fel a, uint64_t e) const {
    Fel acc = one(), base = a;
    while (e) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  Fel inv(Fel a) const {
    if (a.v == 0) throw division_by_zero();
    return pow(a, q_ - 2);
  }

  Fel div(Fel a, Fel b) const { return mul(a, inv(b)); }

  std::string format(Fel a) const { return std::to_string(a.v); }

  Fel parse_element(std::string_view text) const {
    uint64_t v = parse_u32(text, "field element");
    if (v >= q_) throw parse_error("element index " + std::string(text) + " out of range for " + descriptor());
    return Fel{static_cast<uint32_t>(v)};
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  static constexpr uint32_t kMaxDeg = 17;

  static uint32_t parse_u32(std::string_view text, const char* what) {
    if (text.empty()) throw parse_error(std::string("empty ") + what);
    uint64_t v = 0;
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw parse_error(std::string("bad ") + what + ": " + std::string(text));
      v = v * 10 + static_cast<uint64_t>(ch - '0');
      if (v > 0xFFFFFFFFull) throw parse_error(std::string(what) + " out of range");
    }
    return static_cast<uint32_t>(v);
  }

  void check(Fel a) const {
    if (a.v >= q_) throw std::invalid_argument("element does not belong to this field");
  }

  void decode(uint32_t v, uint32_t* digits) const {
    for (uint32_t i = 0; i < m_; ++i) {
      digits[i] = v % p_;
      v /= p_;
    }
  }

  uint32_t p_, m_;
  uint64_t q_;
  std::vector<uint32_t> modulus_;
  std::vector<std::vector<uint32_t>> xred_;
};

}  // namespace sags
