#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace addvol;
using oracle::s1;
using oracle::s2;

TEST_CASE("construction sorts and rejects bad input") {
  Set1D a(std::vector<Int>{3, 1, 0});
  CHECK(a.elements() == std::vector<Int>{0, 1, 3});
  CHECK_THROWS_AS(Set1D(std::vector<Int>{}), Error);
  CHECK_THROWS_AS(s1({0, 0, 1}), Error);
  CHECK_THROWS_AS(s2({{0, 0}, {0, 0}}), Error);
  try {
    s1({0, 0, 1});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_element);
  }
}

TEST_CASE("sumset basics") {
  CHECK(sumset(s1({0}), s1({0})) == s1({0}));
  CHECK(sumset(s1({0, 1, 3}), s1({0, 1, 3})) == s1({0, 1, 2, 3, 4, 6}));
  CHECK(sumset(s1({0, 1, 3}), s1({0, 1, 3})).k() == 6);
  // doubling of the first worked planar example
  CHECK(oracle::example1().doubling_size() == 32);
}

TEST_CASE("sumset is commutative and matches naive enumeration") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Set1D a = oracle::random_set1d(rng, 2 + trial % 5, -20, 20);
    Set1D b = oracle::random_set1d(rng, 2 + (trial / 2) % 5, -20, 20);
    CHECK(sumset(a, b) == sumset(b, a));
    CHECK(a.doubling_size() == oracle::naive_doubling(a.elements()));
  }
}

TEST_CASE("doubling lower bound 2k-1 with equality exactly on APs") {
  // exhaustive over normal-form sets in [0, 10] with k <= 5
  for (int mask = 1; mask < (1 << 10); ++mask) {
    std::vector<Int> v{0};
    for (int i = 0; i < 10; ++i)
      if (mask & (1 << i)) v.push_back(i + 1);
    if (v.size() > 5) continue;
    Set1D a(v);
    const std::size_t k = a.k();
    CHECK(a.doubling_size() >= 2 * k - 1);
    CHECK((a.doubling_size() == 2 * k - 1) == oracle::is_ap(a.elements()));
  }
}

TEST_CASE("normalize") {
  CHECK(normalize(s1({0, 1, 2})) == s1({0, 1, 2}));
  CHECK(normalize(s1({4, 6, 10})) == s1({0, 1, 3}));
  CHECK(normalize(s1({3, 6, 9})) == s1({0, 1, 2}));
  // the normalization map is affine, hence an isomorphism
  Set1D a = s1({4, 6, 10});
  Pairing1D phi;
  for (const Int& x : a.elements()) phi.pairs.push_back({x, (x - 4) / 2});
  CHECK(check_isomorphism(a, normalize(a), phi));
}

TEST_CASE("normalize is idempotent and preserves T") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Set1D a = oracle::random_set1d(rng, 2 + trial % 6, -30, 30);
    Set1D n = normalize(a);
    CHECK(normalize(n) == n);
    CHECK(n.doubling_size() == a.doubling_size());
    CHECK(n.min() == 0);
  }
}

TEST_CASE("bounding boxes are tight") {
  CHECK(bounding_box(s2({{0, 0}})) == BoundingBox{0, 0, 1, 1});
  CHECK(bounding_box(oracle::example1()) == BoundingBox{-1, 0, 5, 4});
  CHECK(bounding_box(oracle::example_rational_chain()) ==
        BoundingBox{0, 0, 10, 9});

  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    Set2D a = oracle::random_set2d(rng, 3 + trial % 5, -9, 9);
    BoundingBox box = bounding_box(a);
    bool left = false, right = false, bottom = false, top = false;
    for (const Point& p : a.points()) {
      CHECK(box.a1 <= p.x);
      CHECK(p.x <= box.a1 + box.h1 - 1);
      CHECK(box.a2 <= p.y);
      CHECK(p.y <= box.a2 + box.h2 - 1);
      left |= p.x == box.a1;
      right |= p.x == box.a1 + box.h1 - 1;
      bottom |= p.y == box.a2;
      top |= p.y == box.a2 + box.h2 - 1;
    }
    CHECK((left && right && bottom && top));
  }
}

TEST_CASE("2D sumset matches naive enumeration") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Set2D a = oracle::random_set2d(rng, 3 + trial % 4, -6, 6);
    CHECK(a.doubling_size() == oracle::naive_doubling(a.points()));
    Set2D b = oracle::random_set2d(rng, 3, -6, 6);
    CHECK(sumset(a, b) == sumset(b, a));
  }
}
