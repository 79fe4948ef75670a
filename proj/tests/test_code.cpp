#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "sags/code.hpp"

using namespace sags;
using namespace sags::testutil;

namespace {

SagsCode quadric_code() {
  Field f5(5, 1, {0, 1});
  ScrollSpec spec(f5, {1, 1});
  return build_code(spec, standard_fiber_bases(spec, first_points(f5, 5), BasisMode::identity));
}

SagsCode rs_code(int e1, size_t s) {
  Field f5(5, 1, {0, 1});
  ScrollSpec spec(f5, {e1});
  return build_code(spec, standard_fiber_bases(spec, first_points(f5, s), BasisMode::identity));
}

}  // namespace

TEST_CASE("parity matrix of the degree-2 code over GF(5) matches the residue values") {
  // P_D = z^5 - z over all of F_5, so P_D' = -1 = 4 and the parity rows are
  // 4*(1,1,1,1,1) and 4*(0,1,2,3,4).
  SagsCode code = rs_code(2, 5);
  REQUIRE(code.R.rows() == 2);
  std::vector<Fel> row0{Fel{4}, Fel{4}, Fel{4}, Fel{4}, Fel{4}};
  std::vector<Fel> row1{Fel{0}, Fel{4}, Fel{3}, Fel{2}, Fel{1}};
  CHECK(code.R.row(0) == row0);
  CHECK(code.R.row(1) == row1);
}

TEST_CASE("build_code validates its inputs") {
  Field f5(5, 1, {0, 1});
  ScrollSpec spec(f5, {3, 1});
  auto es = standard_fiber_bases(spec, first_points(f5, 4), BasisMode::identity);
  CHECK_THROWS_AS(build_code(spec, es), std::invalid_argument);  // s < e1 + 2

  ScrollSpec not_ample(f5, {2, 0});
  auto es2 = standard_fiber_bases(not_ample, first_points(f5, 5), BasisMode::identity);
  CHECK_THROWS_AS(build_code(not_ample, es2), std::invalid_argument);
}

TEST_CASE("code parameters of the worked examples") {
  SagsCode rs = rs_code(2, 5);
  CHECK(rs.n == 5);
  CHECK(rs.k == 3);
  CHECK(rs.designed_guarantee == 1);
  CHECK(rs.sags_inequality);

  SagsCode quad = quadric_code();
  CHECK(quad.n == 10);
  CHECK(quad.k == 4);
  CHECK(quad.designed_guarantee == 2);
  CHECK(quad.sags_inequality);
}

TEST_CASE("encode basics") {
  SagsCode code = quadric_code();
  const Field& f = code.scroll.field();
  CHECK(encode(code, std::vector<Fel>(4, f.zero())) == std::vector<Fel>(10, f.zero()));

  std::vector<Fel> unit{f.one(), f.zero(), f.zero(), f.zero()};
  CHECK(encode(code, unit) == code.G.row(0));

  std::mt19937_64 rng(5);
  auto m1 = random_word(f, 4, rng), m2 = random_word(f, 4, rng);
  CHECK(encode(code, vec_add(f, m1, m2)) == vec_add(f, encode(code, m1), encode(code, m2)));

  CHECK_THROWS_AS(encode(code, std::vector<Fel>(3, f.zero())), std::invalid_argument);
}

TEST_CASE("structural duality over random specs") {
  std::mt19937_64 rng(20250810);
  for (int trial = 0; trial < 40; ++trial) {
    SagsCode code = random_code(rng);
    const Field& f = code.scroll.field();
    CHECK(rank_of(code.G) == code.k);
    CHECK(rank_of(code.R) == code.n - code.k);
    Matrix prod = mat_mul(code.R, transpose(code.G));
    bool all_zero = true;
    for (size_t i = 0; i < prod.rows(); ++i)
      for (size_t j = 0; j < prod.cols(); ++j)
        if (prod.at(i, j) != f.zero()) all_zero = false;
    CHECK(all_zero);
    CHECK(code.sags_inequality);
    // R spans the kernel of G as a cross-check on the structural build
    CHECK(same_row_space(code.R, kernel_basis(code.G)));
  }
}

TEST_CASE("minimum distance by brute force") {
  CHECK(min_distance_bruteforce(rs_code(2, 5)) == 3);  // [5,3] MDS
  SagsCode quad = quadric_code();
  CHECK(min_distance_bruteforce(quad) == 4);

  Field f5(5, 1, {0, 1});
  ScrollSpec s21(f5, {2, 1});
  SagsCode dir21 = build_code(s21, standard_fiber_bases(s21, first_points(f5, 5), BasisMode::identity));
  CHECK(min_distance_bruteforce(dir21) == 3);

  // independent recursive oracle agrees
  CHECK(naive_min_distance(quad.G) == 4);
  CHECK(naive_min_distance(dir21.G) == 3);

  // Singleton bound and designed guarantee
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    SagsCode code = random_code(rng);
    if (std::pow(double(code.scroll.field().order()), double(code.k)) > 2e5) continue;
    int d = min_distance_bruteforce(code);
    CHECK(d >= 1);
    CHECK(d <= static_cast<int>(code.n - code.k) + 1);
    if (code.designed_guarantee >= 1) CHECK(d >= code.designed_guarantee);
    CHECK(d == naive_min_distance(code.G));
  }

  CHECK_THROWS_AS(min_distance_bruteforce(quad, 100), guard_exceeded);
}

TEST_CASE("reed-solomon reduction oracle") {
  Field f5(5, 1, {0, 1});
  for (int e1 = 1; e1 <= 3; ++e1) {
    for (size_t s = static_cast<size_t>(e1) + 2; s <= 5; ++s) {
      SagsCode code = rs_code(e1, s);
      Matrix rs = vandermonde_generator(f5, e1, first_points(f5, s));
      CHECK(same_row_space(code.G, rs));
      CHECK(min_distance_bruteforce(code) == static_cast<int>(s) - e1);
    }
  }
}

TEST_CASE("weight hierarchy") {
  SagsCode quad = quadric_code();
  auto h = weight_hierarchy_bruteforce(quad, 4);
  REQUIRE(h.size() == 4);
  CHECK(h[0] == min_distance_bruteforce(quad));
  for (size_t i = 1; i < h.size(); ++i) CHECK(h[i] > h[i - 1]);
  CHECK(h[1] == h[0] + 1);  // the codimension-2 space still contains the directrix subscroll
  CHECK(h[3] == static_cast<int>(quad.n));

  CHECK_THROWS_AS(weight_hierarchy_bruteforce(quad, 5), std::invalid_argument);
}

TEST_CASE("dual code check") {
  // r=1: dual SAGS evaluates {1, z} scaled by 4
  SagsCode rs = rs_code(2, 5);
  auto res = dual_code_check(rs);
  CHECK(res.ok);
  for (Fel w : res.scaling) CHECK(w == Fel{4});

  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 25; ++trial) {
    SagsCode code = random_code(rng);
    auto check = dual_code_check(code);
    CHECK(check.ok);
    for (Fel w : check.scaling) CHECK(w != code.scroll.field().zero());
  }
}

TEST_CASE("code is invariant under projective rescaling of fiber covectors") {
  std::mt19937_64 rng(31);
  SagsCode code = quadric_code();
  const Field& f = code.scroll.field();
  // scale row 1 of fiber 2's basis by 3: same projective points
  std::vector<Matrix> bases = code.es.bases();
  for (size_t j = 0; j < 2; ++j) bases[2].at(1, j) = f.mul(Fel{3}, bases[2].at(1, j));
  EvaluationSet es2(f, code.es.points(), bases);
  SagsCode scaled = build_code(code.scroll, es2);

  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 2; ++j) {
      ScrollPoint p(f, code.es.points()[i], code.es.bases()[i].row(j));
      ScrollPoint p2(f, es2.points()[i], es2.bases()[i].row(j));
      CHECK(p == p2);
    }
  CHECK(min_distance_bruteforce(scaled) == min_distance_bruteforce(code));
  // generator row spaces differ exactly by an invertible diagonal
  for (size_t c = 0; c < code.n; ++c) {
    std::vector<size_t> col{c};
    CHECK(rank_of(submatrix_cols(code.G, col)) == rank_of(submatrix_cols(scaled.G, col)));
  }
}

TEST_CASE("parity-defined variant codes") {
  Field f3(3, 1, {0, 1});
  // dual scroll of type (2,2): evaluate its sections at all 4 points of one fiber
  ScrollSpec dual(f3, {2, 2});
  std::vector<ScrollPoint> pts;
  for (uint64_t a = 0; a < 3; ++a) pts.emplace_back(f3, Fel{0}, std::vector<Fel>{f3.one(), f3.element(a)});
  pts.emplace_back(f3, Fel{0}, std::vector<Fel>{f3.zero(), f3.one()});
  auto pdc = parity_defined_code(dual, pts);
  CHECK(pdc.length == 4);
  CHECK(pdc.kernel.rows() == 2);  // parity rank is 2 (factors through the fiber)
  int d = min_distance_of_span(pdc.kernel);
  CHECK(d <= 3);
  CHECK(d == 3);  // any two distinct projective points are independent

  // single point: codimension 1
  auto single = parity_defined_code(dual, {pts[0]});
  CHECK(single.kernel.rows() == 0);
  CHECK(rank_of(single.parity) == 1);

  // consistency with the SAGS construction: scaling the canonical-point
  // kernel coordinates by the covector scale and residue factor recovers C
  SagsCode code = quadric_code();
  const Field& f5 = code.scroll.field();
  ScrollSpec dq = dual_scroll(code.scroll, 5);
  std::vector<ScrollPoint> dual_pts;
  std::vector<Fel> col_scale;
  {
    auto pd_points = code.es.points();
    for (size_t i = 0; i < 5; ++i) {
      Fel pd = f5.one();
      for (size_t l = 0; l < 5; ++l)
        if (l != i) pd = f5.mul(pd, f5.sub(pd_points[i], pd_points[l]));
      Matrix bt = transpose(inverse(code.es.bases()[i]));
      for (size_t j = 0; j < 2; ++j) {
        std::vector<Fel> cov(2);
        for (size_t c = 0; c < 2; ++c) cov[c] = bt.at(j, 1 - c);  // sorted dual frame
        // canonicalization scale: first nonzero coordinate
        Fel lead = f5.zero();
        for (Fel x : cov)
          if (x != f5.zero()) {
            lead = x;
            break;
          }
        dual_pts.emplace_back(f5, pd_points[i], cov);
        col_scale.push_back(f5.div(lead, pd));  // covector scale times residue factor
      }
    }
  }
  auto sags_pdc = parity_defined_code(dq, dual_pts);
  // columns of the parity matrix, rescaled, are the columns of R (up to row basis)
  Matrix rescaled = sags_pdc.parity;
  for (size_t c = 0; c < rescaled.cols(); ++c)
    for (size_t rr = 0; rr < rescaled.rows(); ++rr)
      rescaled.at(rr, c) = f5.mul(col_scale[c], rescaled.at(rr, c));
  CHECK(same_row_space(rescaled, code.R));
  CHECK(same_row_space(kernel_basis(rescaled), code.G));
}

TEST_CASE("weight hierarchy honors the enumeration guard") {
  SagsCode quad = quadric_code();
  CHECK_THROWS_AS(weight_hierarchy_bruteforce(quad, 2, 100), guard_exceeded);
}
