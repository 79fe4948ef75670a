#include <catch2/catch_amalgamated.hpp>

#include "sags/scroll.hpp"

using namespace sags;

namespace {

std::vector<Fel> points_upto(const Field& f, size_t s) {
  std::vector<Fel> pts;
  for (size_t i = 0; i < s; ++i) pts.push_back(f.element(i));
  return pts;
}

Section zero_section(const ScrollSpec& spec) {
  Section s;
  s.components.resize(spec.rank());
  for (size_t j = 0; j < spec.rank(); ++j)
    s.components[j].assign(static_cast<size_t>(spec.exponents()[j]) + 1, spec.field().zero());
  return s;
}

}  // namespace

TEST_CASE("scroll spec validation and derived numbers") {
  Field f5(5, 1, {0, 1});
  ScrollSpec s21(f5, {2, 1});
  CHECK(s21.rank() == 2);
  CHECK(s21.degree() == 3);
  CHECK(s21.section_dim() == 5);
  CHECK(s21.very_ample());

  CHECK_THROWS_AS(ScrollSpec(f5, {1, 2}), std::invalid_argument);   // not sorted
  CHECK_THROWS_AS(ScrollSpec(f5, {2, -1}), std::invalid_argument);  // negative
  CHECK_FALSE(ScrollSpec(f5, {1, 0}).very_ample());
}

TEST_CASE("section basis order and count") {
  Field f5(5, 1, {0, 1});
  auto b1 = section_basis(ScrollSpec(f5, {2}));
  REQUIRE(b1.size() == 3);
  for (size_t t = 0; t < 3; ++t) {
    for (size_t c = 0; c < 3; ++c)
      CHECK(b1[t].components[0][c] == (c == t ? f5.one() : f5.zero()));
  }

  auto b2 = section_basis(ScrollSpec(f5, {1, 1}));
  REQUIRE(b2.size() == 4);
  // (1,0),(z,0),(0,1),(0,z)
  CHECK(b2[0].components[0] == std::vector<Fel>{f5.one(), f5.zero()});
  CHECK(b2[1].components[0] == std::vector<Fel>{f5.zero(), f5.one()});
  CHECK(b2[2].components[1] == std::vector<Fel>{f5.one(), f5.zero()});
  CHECK(b2[3].components[1] == std::vector<Fel>{f5.zero(), f5.one()});

  CHECK(section_basis(ScrollSpec(f5, {2, 1})).size() == 5);
}

TEST_CASE("evaluation at identity bases substitutes point values") {
  Field f5(5, 1, {0, 1});
  ScrollSpec spec(f5, {1, 1});
  auto es = standard_fiber_bases(spec, points_upto(f5, 5), BasisMode::identity);

  CHECK(evaluate(spec, zero_section(spec), es) == std::vector<Fel>(10, f5.zero()));

  Section zsec = zero_section(spec);
  zsec.components[0][1] = f5.one();  // (z, 0)
  std::vector<Fel> expect{Fel{0}, Fel{0}, Fel{1}, Fel{0}, Fel{2},
                          Fel{0}, Fel{3}, Fel{0}, Fel{4}, Fel{0}};
  CHECK(evaluate(spec, zsec, es) == expect);

  ScrollSpec line(f5, {2});
  auto es1 = standard_fiber_bases(line, points_upto(f5, 5), BasisMode::identity);
  Section sq = zero_section(line);
  sq.components[0][2] = f5.one();  // z^2
  CHECK(evaluate(line, sq, es1) ==
        std::vector<Fel>{Fel{0}, Fel{1}, Fel{4}, Fel{4}, Fel{1}});
}

TEST_CASE("evaluation is linear in the section") {
  Field f9(3, 2, {1, 0, 1});
  ScrollSpec spec(f9, {2, 1});
  auto es = standard_fiber_bases(spec, points_upto(f9, 6), BasisMode::random, 11);
  auto basis = section_basis(spec);
  const Fel a = f9.element(5);
  // a*t + t' evaluated = a*eval(t) + eval(t')
  const Section &t = basis[1], &t2 = basis[3];
  Section combo = t;
  for (size_t j = 0; j < combo.components.size(); ++j)
    for (size_t c = 0; c < combo.components[j].size(); ++c)
      combo.components[j][c] =
          f9.add(f9.mul(a, t.components[j][c]), t2.components[j][c]);
  auto ev = evaluate(spec, combo, es);
  auto evt = evaluate(spec, t, es);
  auto evt2 = evaluate(spec, t2, es);
  for (size_t c = 0; c < ev.size(); ++c)
    CHECK(ev[c] == f9.add(f9.mul(a, evt[c]), evt2[c]));
}

TEST_CASE("section space dimension equals k") {
  // rank of the evaluation matrix at >= e1+1 fibers is k = f + r
  Field f7(7, 1, {0, 1});
  for (auto exps : {std::vector<int>{2}, {1, 1}, {2, 1}, {3, 2, 1}}) {
    ScrollSpec spec(f7, exps);
    size_t s = static_cast<size_t>(spec.exponents().front()) + 2;
    auto es = standard_fiber_bases(spec, points_upto(f7, s), BasisMode::random, 3);
    auto basis = section_basis(spec);
    Matrix ev(f7, basis.size(), s * spec.rank());
    for (size_t m = 0; m < basis.size(); ++m) ev.set_row(m, evaluate(spec, basis[m], es));
    CHECK(rank_of(ev) == static_cast<size_t>(spec.section_dim()));
  }
}

TEST_CASE("dual scroll") {
  Field f5(5, 1, {0, 1});
  ScrollSpec quad(f5, {1, 1});
  ScrollSpec dq = dual_scroll(quad, 5);
  CHECK(dq.exponents() == std::vector<int>{2, 2});
  CHECK(dq.section_dim() == 6);  // n - k = 10 - 4

  ScrollSpec line(f5, {2});
  ScrollSpec dl = dual_scroll(line, 5);
  CHECK(dl.exponents() == std::vector<int>{1});
  CHECK(dl.section_dim() == 2);

  CHECK_THROWS_AS(dual_scroll(ScrollSpec(f5, {3, 1}), 4), std::invalid_argument);

  // boundary s = e1+2 gives a zero exponent; double dual restores e
  ScrollSpec s31(f5, {3, 1});
  ScrollSpec d = dual_scroll(s31, 5);
  CHECK(d.exponents() == std::vector<int>{2, 0});
  CHECK(dual_scroll(d, 5).exponents() == s31.exponents());
}

TEST_CASE("rational point count matches the closed formula") {
  CHECK(count_rational_points(ScrollSpec(Field(2, 1, {0, 1}), {1, 1})) == 9);
  CHECK(count_rational_points(ScrollSpec(Field(5, 1, {0, 1}), {2})) == 6);
  CHECK(count_rational_points(ScrollSpec(Field(3, 1, {0, 1}), {1, 1, 1})) == 52);

  std::vector<Field> fields = {Field(2, 1, {0, 1}), Field(3, 1, {0, 1}), Field(2, 2, {1, 1, 1}),
                               Field(5, 1, {0, 1})};
  for (const Field& f : fields) {
    const uint64_t q = f.order();
    for (size_t r = 1; r <= 3; ++r) {
      std::vector<int> exps(r, 1);
      exps[0] = 2;
      uint64_t geom = 0, qpow = 1;
      for (size_t i = 0; i < r; ++i) {
        geom += qpow;
        qpow *= q;
      }
      CHECK(count_rational_points(ScrollSpec(f, exps)) == (q + 1) * geom);
    }
  }

  CHECK_THROWS_AS(count_rational_points(ScrollSpec(Field(5, 1, {0, 1}), {1, 1, 1, 1, 1, 1, 1, 1, 1}), 1000000),
                  guard_exceeded);
}

TEST_CASE("standard fiber bases") {
  Field f5(5, 1, {0, 1});
  ScrollSpec spec(f5, {1, 1});
  auto id = standard_fiber_bases(spec, points_upto(f5, 4), BasisMode::identity);
  for (const Matrix& b : id.bases()) CHECK(b == Matrix::identity(f5, 2));

  auto r1 = standard_fiber_bases(spec, points_upto(f5, 4), BasisMode::random, 42);
  auto r2 = standard_fiber_bases(spec, points_upto(f5, 4), BasisMode::random, 42);
  for (size_t i = 0; i < 4; ++i) CHECK(r1.bases()[i] == r2.bases()[i]);
  auto r3 = standard_fiber_bases(spec, points_upto(f5, 4), BasisMode::random, 43);
  bool any_diff = false;
  for (size_t i = 0; i < 4; ++i)
    if (r1.bases()[i] != r3.bases()[i]) any_diff = true;
  CHECK(any_diff);

  // over GF(2), r=2 every sampled basis is one of the 6 invertible matrices
  Field f2(2, 1, {0, 1});
  ScrollSpec s2(f2, {1, 1});
  auto rb = standard_fiber_bases(s2, points_upto(f2, 2), BasisMode::random, 7);
  for (const Matrix& b : rb.bases()) CHECK(rank_of(b) == 2);
}

TEST_CASE("evaluation set validation") {
  Field f5(5, 1, {0, 1});
  std::vector<Matrix> bases{Matrix::identity(f5, 2), Matrix::identity(f5, 2)};
  CHECK_THROWS_AS(EvaluationSet(f5, {Fel{1}, Fel{1}}, bases), std::invalid_argument);
  Matrix singular(f5, 2, 2);
  singular.at(0, 0) = f5.one();
  CHECK_THROWS_AS(EvaluationSet(f5, {Fel{0}, Fel{1}},
                                std::vector<Matrix>{Matrix::identity(f5, 2), singular}),
                  std::invalid_argument);
}

TEST_CASE("scroll points canonicalize projectively") {
  Field f5(5, 1, {0, 1});
  ScrollPoint p(f5, Fel{2}, {Fel{0}, Fel{3}, Fel{1}});
  CHECK(p.direction == std::vector<Fel>{Fel{0}, Fel{1}, Fel{2}});  // scaled by 3^{-1} = 2
  ScrollPoint q(f5, Fel{2}, {Fel{0}, Fel{1}, Fel{2}});
  CHECK(p == q);
  CHECK_THROWS_AS(ScrollPoint(f5, Fel{0}, {Fel{0}, Fel{0}}), std::invalid_argument);
  ScrollPoint inf(f5, {Fel{2}, Fel{1}});
  CHECK(inf.at_infinity);
}
