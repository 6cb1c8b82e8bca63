#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "srm/core.hpp"
#include "srm/enumerate.hpp"

using namespace srm;
using test::mk;
using test::sm;

TEST_CASE("S+_{2,2} is exactly the nine labeled matrices") {
  const std::vector<Srm> got = enumerate_srms(2, 2, ClassFilter::plus());
  REQUIRE(got.size() == 9);
  std::set<SignMatrix> expected;
  for (auto& [label, a] : test::s22_labels())
    if (label != "p") expected.insert(a.matrix());
  std::set<SignMatrix> actual;
  for (const Srm& a : got) actual.insert(a.matrix());
  CHECK(actual == expected);
}

TEST_CASE("S_{2,2} adds exactly one matrix") {
  const std::vector<Srm> got = enumerate_srms(2, 2);
  REQUIRE(got.size() == 10);
  int minus = 0;
  for (const Srm& a : got)
    if (!a.is_plus()) {
      ++minus;
      CHECK(a.matrix() == sm({{0, 1}, {1, -1}}));
    }
  CHECK(minus == 1);
}

TEST_CASE("margin-filtered enumeration") {
  const std::vector<Srm> got =
      enumerate_srms(2, 2, ClassFilter::with_margins({{1, 0}, {1, 0}}));
  REQUIRE(got.size() == 2);
  std::set<SignMatrix> actual{got[0].matrix(), got[1].matrix()};
  CHECK(actual == std::set<SignMatrix>{sm({{1, 0}, {0, 0}}), sm({{0, 1}, {1, -1}})});
}

TEST_CASE("plus class counts follow (m+1)^n") {
  CHECK(count_srms(3, 2, ClassFilter::plus()) == 16);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      long long expected = 1;
      for (int j = 0; j < n; ++j) expected *= m + 1;
      CHECK(count_srms(m, n, ClassFilter::plus()) == expected);
    }
}

TEST_CASE("pinned class sizes") {
  CHECK(count_srms(2, 2) == 10);
  CHECK(count_srms(2, 3) == 35);
  CHECK(count_srms(3, 2) == 20);
  CHECK(count_srms(3, 3) == 112);
}

TEST_CASE("emission is column-major lexicographic without duplicates") {
  auto key = [](const SignMatrix& a) {
    std::vector<int> k;
    for (int j = 0; j < a.cols(); ++j)
      for (int i = 0; i < a.rows(); ++i) k.push_back(a(i, j));
    return k;
  };
  std::vector<std::vector<int>> keys;
  for_each_srm(2, 3, ClassFilter::all(), [&](const Srm& a) { keys.push_back(key(a.matrix())); });
  for (std::size_t t = 1; t < keys.size(); ++t) CHECK(keys[t - 1] < keys[t]);
}

TEST_CASE("filtered enumeration equals post-filtering") {
  const MarginPair target{{1, 1}, {1, 1, 0}};
  std::vector<SignMatrix> filtered;
  for_each_srm(2, 3, ClassFilter::with_margins(target),
               [&](const Srm& a) { filtered.push_back(a.matrix()); });
  std::vector<SignMatrix> post;
  for_each_srm(2, 3, ClassFilter::all(), [&](const Srm& a) {
    if (margins(a) == target) post.push_back(a.matrix());
  });
  CHECK(filtered == post);

  std::vector<SignMatrix> c_filtered, c_post;
  for_each_srm(2, 3, ClassFilter::with_c(1), [&](const Srm& a) { c_filtered.push_back(a.matrix()); });
  for_each_srm(2, 3, ClassFilter::all(), [&](const Srm& a) {
    const MarginPair p = margins(a);
    if (*std::max_element(p.row_sums.begin(), p.row_sums.end()) <= 1)
      c_post.push_back(a.matrix());
  });
  CHECK(c_filtered == c_post);
}

TEST_CASE("every enumerated member satisfies the margin theorem") {
  for (auto [m, n] : {std::pair{2, 2}, {3, 3}, {4, 4}, {2, 4}})
    for_each_srm(m, n, ClassFilter::all(),
                 [&](const Srm& a) { CHECK(realizable_margins(margins(a))); });
}

TEST_CASE("pm class enumeration") {
  const std::vector<SignMatrix> cls = enumerate_pm_class({{2, 0}, {2, 0}});
  CHECK(std::find(cls.begin(), cls.end(), sm({{1, 1}, {1, -1}})) != cls.end());
  for (const SignMatrix& x : cls) CHECK(margins(x) == MarginPair{{2, 0}, {2, 0}});

  const std::vector<SignMatrix> perms = enumerate_pm_class({{1, 1}, {1, 1}});
  REQUIRE(perms.size() == 2);
  CHECK(std::set<SignMatrix>(perms.begin(), perms.end()) ==
        std::set<SignMatrix>{sm({{1, 0}, {0, 1}}), sm({{0, 1}, {1, 0}})});

  CHECK(enumerate_pm_class({{1}, {1}}) == std::vector<SignMatrix>{sm({{1}})});
}

TEST_CASE("brute-force maxima") {
  CHECK(brute_force_max_nonzeros(2, 2) == 3);
  CHECK(brute_force_max_nonzeros(1, 2) == 2);
  CHECK(brute_force_max_nonzeros(3, 3) == 6);
}

TEST_CASE("cell cap") {
  CHECK_THROWS_AS(count_srms(5, 5), CapExceeded);
  CHECK(count_srms(5, 5, ClassFilter::plus(), 25) > 0);
}
