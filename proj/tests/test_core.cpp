#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "srm/core.hpp"
#include "srm/enumerate.hpp"
#include "srm/matrix.hpp"

using namespace srm;
using test::mk;
using test::sm;

TEST_CASE("validation accepts the worked examples") {
  CHECK(validate_srm(sm({{0, 1}, {1, -1}})).ok());
  CHECK(validate_srm(SignMatrix(3, 3)).ok());
  CHECK(validate_srm(sm({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}})).ok());
  CHECK(validate_srm(sm({{0, 1, 0, 1}, {1, -1, 1, -1}, {0, 1, -1, 1}})).ok());
}

TEST_CASE("validation reports the earliest violation") {
  // transpose of a valid SRM need not be an SRM
  const ValidationResult r = validate_srm(sm({{0, 1, 0}, {1, -1, 1}, {1, 0, -1}}));
  REQUIRE(!r.ok());
  CHECK(r.violation->kind == ViolationKind::ColumnPrefix);
  CHECK(r.violation->row == 2);
  CHECK(r.violation->col == 0);
  CHECK(r.violation->value == 2);

  const ValidationResult neg = validate_srm(sm({{-1}}));
  REQUIRE(!neg.ok());
  CHECK(neg.violation->to_string() == "column 1 prefix sum -1 at (1,1)");

  const ValidationResult rowneg = validate_srm(sm({{0, 1}, {1, -1}, {-1, 1}}));
  REQUIRE(!rowneg.ok());
  CHECK(rowneg.violation->kind == ViolationKind::RowPrefix);
  CHECK(rowneg.violation->row == 2);
}

TEST_CASE("sum matrix of the worked examples") {
  CHECK(sum_matrix(sm({{0, 1}, {1, -1}})) == IntMatrix::from_rows({{0, 1}, {1, 1}}));
  CHECK(sum_matrix(SignMatrix(2, 3)) == IntMatrix(2, 3));
  const SignMatrix a = sm({{0, 1, 0, 1, 1, 0},
                           {0, 0, 1, -1, 0, 1},
                           {1, 0, -1, 1, 0, -1},
                           {0, 0, 1, 0, -1, 1},
                           {0, 0, 0, 0, 1, -1},
                           {0, 0, 0, 0, 0, 1}});
  const IntMatrix expected = IntMatrix::from_rows({{0, 1, 1, 2, 3, 3},
                                                   {0, 1, 2, 2, 3, 4},
                                                   {1, 2, 2, 3, 4, 4},
                                                   {1, 2, 3, 4, 4, 5},
                                                   {1, 2, 3, 4, 5, 5},
                                                   {1, 2, 3, 4, 5, 6}});
  CHECK(sum_matrix(a) == expected);
}

TEST_CASE("inverse sum matrix") {
  CHECK(inverse_sum_matrix(IntMatrix::from_rows({{0, 1}, {1, 1}})) ==
        IntMatrix::from_rows({{0, 1}, {1, -1}}));
  CHECK(inverse_sum_matrix(IntMatrix::from_rows({{1, 1}, {1, 2}})) ==
        IntMatrix::from_rows({{1, 0}, {0, 1}}));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), entry(-5, 5);
  for (int t = 0; t < 1000; ++t) {
    IntMatrix x(dim(rng), dim(rng));
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) x.set(i, j, entry(rng));
    CHECK(inverse_sum_matrix(sum_matrix(x)) == x);
  }
  for (int t = 0; t < 200; ++t) {
    const SignMatrix a = test::random_sign_matrix(rng, dim(rng), dim(rng));
    CHECK(inverse_sum_matrix(sum_matrix(a)) == to_int_matrix(a));
  }
}

TEST_CASE("margins of the introduction examples") {
  CHECK(margins(sm({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}})) ==
        MarginPair{{2, 0, 0}, {1, 1, 0}});
  CHECK(margins(sm({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}, {0, 0, 1}})) ==
        MarginPair{{2, 0, 0, 1}, {1, 1, 1}});
  CHECK(margins(SignMatrix(3, 4)) == MarginPair{{0, 0, 0}, {0, 0, 0, 0}});
}

TEST_CASE("margin realizability") {
  CHECK(realizable_margins({{2, 0, 0, 1}, {1, 1, 1}}));
  CHECK(realizable_margins({{4, 0, 0}, {1, 1, 1, 1}}));
  CHECK(!realizable_margins({{1}, {2}}));
  CHECK(!realizable_margins({{-1, 2}, {1, 0}}));
  CHECK(!realizable_margins({{1, 1}, {1, 0}}));
}

TEST_CASE("canonical staircase") {
  CHECK(canonical_staircase({{2, 0, 0, 1}, {1, 1, 1}}).matrix() ==
        sm({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(canonical_staircase({{4, 0, 0}, {1, 1, 1, 1}}).matrix() ==
        sm({{1, 1, 1, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
  CHECK(canonical_staircase({{1}, {1}}).matrix() == sm({{1}}));
  CHECK_THROWS_AS(canonical_staircase({{1}, {2}}), std::invalid_argument);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 5), bit(0, 1);
  for (int t = 0; t < 200; ++t) {
    const int m = dim(rng), n = dim(rng);
    std::vector<int> s(n);
    int total = 0;
    for (int j = 0; j < n; ++j) total += s[j] = bit(rng);
    std::vector<int> r(m, 0);
    for (int k = 0; k < total; ++k) ++r[std::uniform_int_distribution<int>(0, m - 1)(rng)];
    const Srm a = canonical_staircase({r, s});
    CHECK(margins(a) == MarginPair{r, s});
    // staircase shape: ones in later columns never sit in earlier rows
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (a(i, j) == 1)
          for (int k = 0; k < i; ++k)
            for (int l = j + 1; l < n; ++l) CHECK(a(k, l) == 0);
  }
}

TEST_CASE("maximum nonzero counts") {
  CHECK(max_nonzeros(6, 8) == 37);
  CHECK(max_nonzeros(9, 11) == 76);
  CHECK(max_nonzeros(4, 4) == 11);
  CHECK(max_nonzeros(4, 4) == (3 * 16 - 4) / 4);
  CHECK(max_nonzeros(1, 5) == 5);
  // the square-case formula
  for (int n = 1; n <= 12; ++n) {
    const int mod = n % 4;
    const int expected = (mod == 0 || mod == 3) ? (3 * n * n - n) / 4 : (3 * n * n - n + 2) / 4;
    if (n == 1) continue;  // single row: every column holds a 1
    CHECK(max_nonzeros(n, n) == expected);
  }
}

TEST_CASE("extremal SRM construction") {
  const Srm big = extremal_srm(6, 8);
  CHECK(big.matrix() == sm({{0, 0, 0, 1, 0, 1, 0, 1},
                            {0, 0, 1, -1, 1, -1, 1, -1},
                            {0, 1, -1, 1, -1, 1, -1, 1},
                            {1, -1, 1, -1, 1, -1, 1, -1},
                            {0, 1, -1, 1, -1, 1, -1, 1},
                            {0, 0, 1, -1, 1, -1, 1, -1}}));
  CHECK(margins(big).col_sums == std::vector<int>{1, 1, 1, 0, 1, 0, 1, 0});
  CHECK(extremal_srm(1, 3).matrix() == sm({{1, 1, 1}}));
  CHECK(nonzero_count(extremal_srm(3, 3).matrix()) == 6);
  for (int m = 1; m <= 9; ++m)
    for (int n = 1; n <= 11; ++n)
      CHECK(nonzero_count(extremal_srm(m, n).matrix()) == max_nonzeros(m, n));
}

TEST_CASE("multichain correspondence") {
  const Srm a = mk({{0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0},
                    {1, 0, 0, 1, 0, 1}});
  const Multichain c = multichain_of(a);
  REQUIRE(c.length() == 4);
  CHECK(c.sets[0] == ((1ull << 1) | (1ull << 4)));
  CHECK(c.sets[1] == ((1ull << 1) | (1ull << 2) | (1ull << 4)));
  CHECK(c.sets[2] == c.sets[1]);
  CHECK(c.sets[3] == (1ull << 6) - 1);
  CHECK(srm_of_multichain(c) == a);

  const Srm perm = mk({{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 1, 0, 0}});
  const Multichain pc = multichain_of(perm);
  CHECK(pc.sets == std::vector<std::uint64_t>{0b0100, 0b0101, 0b1101, 0b1111});

  CHECK(multichain_of(mk({{0, 0}, {0, 0}})).sets == std::vector<std::uint64_t>{0, 0});
  CHECK_THROWS_AS(multichain_of(mk({{0, 1}, {1, -1}})), std::invalid_argument);
  CHECK_THROWS_AS(Multichain(3, {0b011, 0b001}), std::invalid_argument);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int t = 0; t < 1000; ++t) {
    const int m = dim(rng), n = dim(rng);
    std::vector<std::uint64_t> sets(m);
    std::uint64_t cur = 0;
    std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << n) - 1);
    for (int i = 0; i < m; ++i) sets[i] = cur |= bits(rng);
    const Multichain chain(n, sets);
    CHECK(multichain_of(srm_of_multichain(chain)) == chain);
  }
}

TEST_CASE("structural invariants over a whole class") {
  for_each_srm(3, 3, ClassFilter::all(), [&](const Srm& a) {
    // nonzeros of every column alternate +1, -1, ... starting with +1
    for (int j = 0; j < 3; ++j) {
      int expect = 1;
      for (int i = 0; i < 3; ++i) {
        if (a(i, j) == 0) continue;
        CHECK(a(i, j) == expect);
        expect = -expect;
      }
    }
    // column 1 carries at most one nonzero, a +1
    int first_nonzeros = 0;
    for (int i = 0; i < 3; ++i)
      if (a(i, 0) != 0) {
        ++first_nonzeros;
        CHECK(a(i, 0) == 1);
      }
    CHECK(first_nonzeros <= 1);
    // #(+1) - #(-1) <= n and total row sum <= n
    int plus = 0, minus = 0, total = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        plus += a(i, j) == 1;
        minus += a(i, j) == -1;
        total += a(i, j);
      }
    CHECK(plus - minus <= 3);
    CHECK(total <= 3);
  });
  // equality of the difference bound at the all-ones row
  const Srm top = mk({{1, 1, 1}, {0, 0, 0}});
  CHECK(nonzero_count(top.matrix()) == 3);
}
