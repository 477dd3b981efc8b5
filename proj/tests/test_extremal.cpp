#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace addvol;
using oracle::s1;

TEST_CASE("T composition and decomposition") {
  CHECK(compose_T(11, 8, 2) == 56);
  CHECK(compose_T(5, 4, 0) == 12);
  for (std::int64_t k = 3; k <= 12; ++k) {
    CHECK(compose_T(k, 2, 0) == 2 * k - 1);
    CHECK(compose_T(k, k - 1, 0) == (k * k - k) / 2 + 2);
  }

  CHECK(decompose_T(11, 56) == std::pair<std::int64_t, std::int64_t>{8, 2});
  CHECK(decompose_T(5, 9) == std::pair<std::int64_t, std::int64_t>{2, 0});
  // boundary overlap: (2,2) and (3,0) both give T = 11; canonical is smaller c
  CHECK(decompose_T(5, 11) == std::pair<std::int64_t, std::int64_t>{2, 2});
  CHECK(compose_T(5, 3, 0) == 11);
  CHECK(a_m_formula(5, 11) == pow2(0) * (5 + 1 - 2 + 2));
  CHECK(a_m_formula(5, 11) == pow2(1) * (5 + 1 - 3 + 0));

  CHECK_THROWS_AS(decompose_T(5, 8), Error);
  CHECK_THROWS_AS(decompose_T(5, 13), Error);
  CHECK_THROWS_AS(compose_T(5, 1, 0), Error);
  CHECK_THROWS_AS(compose_T(5, 3, 2), Error);
}

TEST_CASE("a_m formula values") {
  CHECK(a_m_formula(11, 56) == 384);
  CHECK(a_m_formula(5, 9) == 4);
  CHECK(a_m_formula(5, 12) == 8);
}

TEST_CASE("round trip and boundary agreement up to k = 20") {
  for (std::int64_t k = 3; k <= 20; ++k) {
    for (std::int64_t c = 2; c <= k - 1; ++c) {
      for (std::int64_t b = 0; b <= k - c - 1; ++b) {
        Int t = compose_T(k, c, b);
        auto [c2, b2] = decompose_T(k, t);
        CHECK(pow2(c2 - 2) * (k + 1 - c2 + b2) == pow2(c - 2) * (k + 1 - c + b));
      }
      // the segment seam: (c, k-c-1) and (c+1, 0) share T and a_m
      if (c + 1 <= k - 1) {
        CHECK(compose_T(k, c, k - c - 1) == compose_T(k, c + 1, 0));
        CHECK(pow2(c - 2) * (k + 1 - c + (k - c - 1)) == pow2(c - 1) * (k - c));
      }
    }
  }
}

TEST_CASE("basic extremal sets") {
  CHECK(basic_extremal(5, 0) == s1({0, 1, 2, 3, 4}));
  CHECK(basic_extremal(5, 0).doubling_size() == 9);
  CHECK(basic_extremal(5, 2) == s1({0, 1, 2, 3, 6}));
  CHECK(basic_extremal(5, 2).doubling_size() == 11);
  CHECK(basic_extremal(4, 1) == s1({0, 1, 2, 4}));
  CHECK(basic_extremal(4, 1).doubling_size() == 8);
  CHECK_THROWS_AS(basic_extremal(2, 0), Error);
  CHECK_THROWS_AS(basic_extremal(5, 3), Error);
}

TEST_CASE("generalized extremal sets") {
  // the worked 11-element example, with its hole-in-the-middle core
  Set1D holes_core = s1({0, 1, 2, 4, 6});
  Set1D worked = gen_extremal(11, 8, 2, holes_core);
  CHECK(worked == s1({0, 1, 2, 4, 8, 16, 32, 48, 96, 192, 384}));
  CHECK(worked.doubling_size() == 56);
  CHECK(worked.max() == 384);

  // the default core gives a different witness with the same invariants
  Set1D built = gen_extremal(11, 8, 2);
  CHECK(built == s1({0, 1, 2, 4, 8, 16, 24, 48, 96, 192, 384}));
  CHECK(built.doubling_size() == 56);
  CHECK(built.max() == 384);

  CHECK(gen_extremal(5, 3, 1) == s1({0, 1, 2, 4, 8}));
  CHECK(gen_extremal(5, 3, 1).doubling_size() == 12);

  CHECK_THROWS_AS(gen_extremal(5, 5, 0), Error);
  // a core that is not an extremal 3k-4-range set is rejected
  CHECK_THROWS_AS(gen_extremal(11, 8, 2, s1({0, 1, 2, 3, 4})), Error);
}

TEST_CASE("generated sets pass the (k, T, max) triple on the whole grid") {
  for (std::int64_t k = 3; k <= 20; ++k) {
    for (std::int64_t c = 2; c <= k - 1; ++c) {
      for (std::int64_t b = 0; b <= k - c - 1; ++b) {
        Set1D a = gen_extremal(k, c, b);  // constructor verifies the triple
        CHECK(a.k() == static_cast<std::size_t>(k));
        CHECK(Int(a.doubling_size()) == compose_T(k, c, b));
        CHECK(a.max() == a_m_formula(k, compose_T(k, c, b)));
      }
    }
  }
}

TEST_CASE("approximate-group generator") {
  auto g1 = ApproxGroupParams::make(3, 1, 0);
  CHECK(gen_approx_group(g1) == s1({-3, -1, 0, 1, 3}));
  CHECK(gen_approx_group(g1).doubling_size() == 11);

  auto g2 = ApproxGroupParams::make(5, 1, 2);
  CHECK(gen_approx_group(g2) == s1({-9, -3, -1, 0, 1, 3, 9}));
  CHECK(gen_approx_group(g2).doubling_size() == 21);

  auto g3 = ApproxGroupParams::make(3, 0, 0);
  CHECK(gen_approx_group(g3) == s1({-1, 0, 1}));
  CHECK(gen_approx_group(g3).doubling_size() == 5);

  CHECK_THROWS_AS(ApproxGroupParams::make(4, 1, 0), Error);
  CHECK_THROWS_AS(ApproxGroupParams::make(5, 1, 1), Error);
  CHECK_THROWS_AS(ApproxGroupParams::make(5, 1, 4), Error);
}

TEST_CASE("span and length formulas") {
  CHECK(L_m_formula(5, 4, 0) == 7);
  CHECK(L_m_formula(7, 4, 2) == 19);
  for (std::int64_t k = 3; k <= 10; ++k)
    for (std::int64_t b = 0; b <= k - 3; ++b)
      CHECK(L_m_formula(k, 2, b) == k + b);

  CHECK(approx_compose_T(5, 4, 0) == 11);
  CHECK(approx_compose_T(7, 4, 2) == 21);
  CHECK(approx_compose_T(3, 2, 0) == 5);
  CHECK_THROWS_AS(approx_compose_T(6, 3, 0), Error);
}

TEST_CASE("approximate-group grid: symmetry, membership, span, doubling") {
  for (std::int64_t kb1 : {3, 5, 7, 9}) {
    for (std::int64_t kb2 = 0; kb2 <= 3; ++kb2) {
      for (std::int64_t b = 0; b <= kb1 - 3; b += 2) {
        auto g = ApproxGroupParams::make(kb1, kb2, b);
        Set1D a = gen_approx_group(g);
        CHECK(a.contains(0));
        for (const Int& x : a.elements()) CHECK(a.contains(-x));
        CHECK(a.max() - a.min() + 1 == L_m_formula(g.k, g.c, g.b));
        const Int t = Int(a.doubling_size());
        // Actual doubling of the tripling construction; the closed form
        // ck - (3c^2-2c-4)/4 + b matches it only for kbar2 <= 1.
        CHECK(t == Int(g.c) * g.k - Int(g.c) * g.c / 2 - g.c + 3 + g.b);
        if (kb2 <= 1) CHECK(t == approx_compose_T(g.k, g.c, g.b));
      }
    }
  }
}
