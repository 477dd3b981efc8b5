#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace addvol;
using oracle::s1;
using oracle::s2;

namespace {

// Mian-Chowla style Sidon prefixes: all pairwise sums distinct.
const std::vector<std::vector<long long>> kSidon = {
    {0, 1},          {0, 1, 3},          {0, 1, 3, 7},
    {0, 1, 3, 7, 12}, {0, 1, 3, 7, 12, 20}, {0, 1, 3, 7, 12, 20, 30}};

Pairing2D1D example1_projection() {
  // the worked projection along (1,6): (x,y) -> y - 6x
  Pairing2D1D phi;
  const Set2D a = oracle::example1();
  for (const Point& p : a.points()) phi.pairs.push_back({p, p.y - 6 * p.x});
  return phi;
}

}  // namespace

TEST_CASE("relation rows for small sets") {
  RelationMatrix rm = relation_matrix(s1({0, 1, 2}));
  REQUIRE(rm.rows.size() == 1);
  CHECK(rm.rows[0] == RelationRow{1, -2, 1});
  CHECK(rm.lambda == 1);

  RelationMatrix sidon = relation_matrix(s1({0, 1, 3, 7}));
  CHECK(sidon.rows.empty());
  CHECK(sidon.lambda == 0);
}

TEST_CASE("the k=7 relation vectors") {
  // relations a0 + a2 = 2 a1 and a1 + a5 = a2 + a4
  Set1D a = s1({0, 1, 2, 5, 9, 10, 30});
  RelationMatrix rm = relation_matrix(a);
  RelationRow r1{1, -2, 1, 0, 0, 0, 0};
  RelationRow r2{0, 1, -1, 0, -1, 1, 0};
  CHECK(std::count(rm.rows.begin(), rm.rows.end(), r1) == 1);
  CHECK(std::count(rm.rows.begin(), rm.rows.end(), r2) == 1);
}

TEST_CASE("relation rows annihilate their own set") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    Set1D a = oracle::random_set1d(rng, 3 + trial % 5, -15, 15);
    RelationMatrix rm = relation_matrix(a);
    for (const RelationRow& row : rm.rows) {
      CHECK(evaluate_row(row, a.elements()) == 0);
      Int abs_sum = 0;
      bool first_positive = false, seen = false;
      for (const Int& v : row) {
        abs_sum += abs_int(v);
        if (!seen && v != 0) {
          first_positive = v > 0;
          seen = true;
        }
      }
      CHECK(abs_sum <= 4);
      CHECK(first_positive);
    }
  }
}

TEST_CASE("lambda agrees with a rational-elimination oracle") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Set1D a = oracle::random_set1d(rng, 4 + trial % 5, -12, 12);
    RelationMatrix rm = relation_matrix(a);
    CHECK(rm.lambda == oracle::rational_rank_oracle(rm.rows));
  }
  // and on a 2D set
  RelationMatrix rm2 = relation_matrix(oracle::example_rational_chain());
  CHECK(rm2.lambda == oracle::rational_rank_oracle(rm2.rows));
}

TEST_CASE("rank never decreases as rows accumulate") {
  RelationMatrix rm = relation_matrix(s1({0, 1, 2, 3, 4, 6}));
  std::size_t prev = 0;
  for (std::size_t n = 1; n <= rm.rows.size(); ++n) {
    std::vector<RelationRow> prefix(rm.rows.begin(), rm.rows.begin() + n);
    std::size_t r = rational_rank(prefix);
    CHECK(r >= prev);
    prev = r;
  }
}

TEST_CASE("freiman dimension") {
  CHECK(freiman_dim(s1({0})) == 0);
  CHECK(freiman_dim(s1({0, 1, 2, 3})) == 1);
  CHECK(freiman_dim(s1({0, 1, 3, 7})) == 3);
  CHECK(freiman_dim(oracle::example1()) == 2);

  for (std::size_t k = 2; k <= 7; ++k) {
    std::vector<Int> ap;
    for (std::size_t i = 0; i < k; ++i) ap.push_back(Int(i));
    CHECK(freiman_dim(Set1D(ap)) == 1);
  }
  for (const auto& xs : kSidon) {
    std::vector<Int> v(xs.begin(), xs.end());
    Set1D a(v);
    CHECK(freiman_dim(a) == static_cast<std::int64_t>(a.k()) - 1);
  }
}

TEST_CASE("dimension is invariant under integral affine bijections") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Set1D a = oracle::random_set1d(rng, 3 + trial % 5, -10, 10);
    std::vector<Int> img;
    for (const Int& x : a.elements()) img.push_back(3 * x - 7);
    CHECK(freiman_dim(a) == freiman_dim(Set1D(img)));
  }
}

TEST_CASE("homomorphism checks") {
  Set1D a = s1({0, 1, 2});
  CHECK(check_homomorphism(a, a, identity_pairing(a)));
  CHECK(check_isomorphism(a, a, identity_pairing(a)));

  Pairing1D bad;
  bad.pairs = {{0, 0}, {1, 0}, {2, 1}};
  CHECK_FALSE(check_homomorphism(a, s1({0, 1}), bad));

  Pairing1D missing;
  missing.pairs = {{0, 0}, {1, 0}};
  CHECK_THROWS_AS(check_homomorphism(a, s1({0, 1}), missing), Error);
  try {
    check_homomorphism(a, s1({0, 1}), missing);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::map_not_total);
  }
}

TEST_CASE("affine maps are isomorphisms") {
  Set1D a = s1({0, 1, 2});
  Set1D b = s1({5, 7, 9});
  CHECK(check_isomorphism(a, b, affine_pairing(a, 2, 5)));
}

TEST_CASE("the worked projection is a one-to-one homomorphism, not an isomorphism") {
  Pairing2D1D phi = example1_projection();
  std::vector<Int> vals;
  for (const auto& pr : phi.pairs) vals.push_back(pr.second);
  Set1D image(vals);
  CHECK(check_homomorphism(oracle::example1(), image, phi));
  CHECK_FALSE(check_isomorphism(oracle::example1(), image, phi));
}

TEST_CASE("isomorphism implies equal doubling") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    Set1D a = oracle::random_set1d(rng, 3 + trial % 4, -10, 10);
    Set1D b(std::vector<Int>([&] {
      std::vector<Int> v;
      for (const Int& x : a.elements()) v.push_back(5 * x + 3);
      return v;
    }()));
    Pairing1D phi = affine_pairing(a, 5, 3);
    REQUIRE(check_isomorphism(a, b, phi));
    CHECK(a.doubling_size() == b.doubling_size());
    CHECK(check_homomorphism(a, b, phi));
    CHECK(check_homomorphism(b, a, phi.inverse()));
  }
}

TEST_CASE("rational affine images") {
  Set2D a = oracle::example_rational_chain();
  RatImage contracted = apply_affine(a, RatAffineMap2D::diag(Rat(1, 3), 1));
  CHECK_FALSE(contracted.integral);
  bool has_third = false;
  for (const RatPoint& p : contracted.points)
    if (p.x == Rat(4, 3) && p.y == 8) has_third = true;
  CHECK(has_third);

  RatImage same = apply_affine(a, RatAffineMap2D::identity());
  CHECK(same.integral);
  CHECK(same.to_set2d() == a);

  // contract, project along (1,16), dilate y by 3
  RatImage chained = apply_affine(
      apply_affine(contracted, RatAffineMap2D::projection_along(16)),
      RatAffineMap2D::diag(1, 3));
  REQUIRE(chained.integral);
  std::vector<Int> got;
  for (const RatPoint& p : chained.points) {
    CHECK(p.x == 0);
    got.push_back(boost::multiprecision::numerator(p.y));
  }
  Set1D got_set(got);
  CHECK(got_set == s1({24, 12, 6, 3, 0, -24, -40, -56, -72,
                       -120, -132, -138, -141, -144}));
  CHECK(freiman_dim(got_set) == 1);
}

TEST_CASE("map composition agrees with sequential application") {
  Set2D a = oracle::example2();
  RatAffineMap2D m1 = RatAffineMap2D::diag(Rat(1, 2), 3);
  RatAffineMap2D m2{1, 2, 0, 1, Rat(-1, 2), 4};
  RatImage seq = apply_affine(apply_affine(a, m1), m2);
  RatImage composed = apply_affine(a, m1.then(m2));
  CHECK(seq.points == composed.points);
}
