#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "helpers.hpp"
#include "srm/enumerate.hpp"
#include "srm/interchange.hpp"

using namespace srm;
using test::mk;
using test::sm;

TEST_CASE("interchange application") {
  const SignMatrix a = sm({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  const SignMatrix mid = apply_interchange(a, {0, 1, 0, 1, +1});
  CHECK(mid == sm({{1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 1}}));
  CHECK(margins(mid) == margins(a));

  const SignMatrix back = apply_interchange(apply_interchange(a, {0, 2, 1, 2, +1}),
                                            {0, 2, 1, 2, -1});
  CHECK(back == a);

  CHECK_THROWS_AS(apply_interchange(sm({{1, 0}, {0, 1}}), {0, 1, 0, 1, +1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(apply_interchange(sm({{1, 0}, {0, 1}}), {0, 1, 0, 5, +1}),
                  std::invalid_argument);
}

TEST_CASE("minus-one elimination follows the worked trace") {
  const Srm a = mk({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
  const EliminationResult r = eliminate_minus_ones(a);
  REQUIRE(r.trace.steps.size() == 2);
  CHECK(r.trace.steps[0] == InterchangeStep{0, 1, 0, 1, +1});
  CHECK(r.trace.steps[1] == InterchangeStep{0, 2, 1, 2, +1});
  const std::vector<SignMatrix> states = replay_trace(r.trace);
  CHECK(states[1] == sm({{1, 0, 1}, {0, 0, 0}, {0, 1, -1}, {0, 0, 1}}));
  CHECK(states[2] == sm({{1, 1, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(r.result.matrix() == states[2]);

  CHECK(eliminate_minus_ones(mk({{1, 0}, {0, 1}})).trace.steps.empty());

  const EliminationResult p = eliminate_minus_ones(mk({{0, 1}, {1, -1}}));
  REQUIRE(p.trace.steps.size() == 1);
  CHECK(p.trace.steps[0] == InterchangeStep{0, 1, 0, 1, +1});
  CHECK(p.result.matrix() == sm({{1, 0}, {0, 0}}));
}

TEST_CASE("elimination properties over a class") {
  for_each_srm(3, 3, ClassFilter::all(), [&](const Srm& a) {
    int minus = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) minus += a(i, j) == -1;
    const EliminationResult r = eliminate_minus_ones(a);
    CHECK(static_cast<int>(r.trace.steps.size()) == minus);
    CHECK(r.result.is_plus());
    CHECK(margins(r.result) == margins(a));
    replay_trace(r.trace);  // validates every intermediate
  });
}

TEST_CASE("SRM interchange paths") {
  const InterchangeTrace t1 = srm_interchange_path(mk({{0, 1}, {1, -1}}), mk({{1, 0}, {0, 0}}));
  CHECK(t1.steps.size() == 1);

  const Srm self = mk({{0, 1}, {1, -1}});
  CHECK(srm_interchange_path(self, self).steps.empty());

  const InterchangeTrace t2 = srm_interchange_path(
      mk({{0, 1, 1}, {1, -1, 0}, {0, 1, -1}, {0, 0, 1}}),
      canonical_staircase({{2, 0, 0, 1}, {1, 1, 1}}));
  CHECK(t2.steps.size() == 2);

  CHECK_THROWS_AS(srm_interchange_path(mk({{1, 0}, {0, 0}}), mk({{0, 1}, {0, 0}})),
                  std::invalid_argument);

  // group S_{3,3} by margins and connect members pairwise
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Srm>> classes;
  for_each_srm(3, 3, ClassFilter::all(), [&](const Srm& a) {
    const MarginPair p = margins(a);
    classes[{p.row_sums, p.col_sums}].push_back(a);
  });
  int paths = 0;
  for (auto& [key, members] : classes)
    for (std::size_t i = 0; i + 1 < members.size() && paths < 300; i += 2) {
      const InterchangeTrace t = srm_interchange_path(members[i], members[i + 1]);
      CHECK(replay_trace(t).back() == members[i + 1].matrix());
      ++paths;
    }
  CHECK(paths > 50);
}

TEST_CASE("(0,1,2)-class nonemptiness") {
  CHECK(a012_nonempty({3, 1}, {3, 1}));
  CHECK(a012_nonempty({2}, {2}));
  CHECK(a012_nonempty({4, 4}, {4, 4}));
  CHECK(a012_nonempty({4, 0}, {1, 1, 1, 1}));
  CHECK(!a012_nonempty({3, 0}, {3}));  // one column cannot hold 3
  CHECK_THROWS_AS(a012_nonempty({1}, {2}), std::invalid_argument);
  CHECK_THROWS_AS(a012_nonempty({-1, 1}, {0}), std::invalid_argument);
}

TEST_CASE("pm-class nonemptiness") {
  CHECK(pm_nonempty({2, 0}, {2, 0}));
  CHECK(pm_nonempty({1, 1, 1}, {1, 1, 1}));
  CHECK(!pm_nonempty({3, 0}, {2, 1}));
  CHECK_THROWS_AS(pm_nonempty({1}, {0}), std::invalid_argument);

  // tiny cross-check against enumeration and the A -> A+J bijection
  for (int r0 = -2; r0 <= 2; ++r0)
    for (int r1 = -2; r1 <= 2; ++r1)
      for (int s0 = -2; s0 <= 2; ++s0) {
        const int s1 = r0 + r1 - s0;
        if (s1 < -2 || s1 > 2) continue;
        const std::vector<int> r{r0, r1}, s{s0, s1};
        const bool empty = enumerate_pm_class({r, s}).empty();
        CHECK(pm_nonempty(r, s) == !empty);
        std::vector<int> rs{r0 + 2, r1 + 2}, ss{s0 + 2, s1 + 2};
        CHECK(a012_nonempty(rs, ss) == !empty);
      }
}

TEST_CASE("pm interchange path on the worked 5x5 pair") {
  const SignMatrix start = sm({{1, 0, -1, 1, 0},
                               {-1, 1, 1, 0, 0},
                               {-1, 1, 1, -1, 1},
                               {1, 0, -1, 1, 0},
                               {1, -1, 1, 0, 0}});
  const SignMatrix end = sm({{1, 0, 0, 0, 0},
                             {0, 0, 0, 1, 0},
                             {0, 1, 0, 0, 0},
                             {0, 0, 0, 0, 1},
                             {0, 0, 1, 0, 0}});
  const InterchangeTrace t = pm_interchange_path(start, end, 25);
  CHECK(t.steps.size() == 4);
  CHECK(replay_trace(t).back() == end);

  CHECK(pm_interchange_path(start, start, 25).steps.empty());
  CHECK_THROWS_AS(pm_interchange_path(sm({{1, 0}, {0, 0}}), sm({{0, 1}, {0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("class equality characterization") {
  CHECK(class_equality({8, 7, 7, 5, 7, 7}, {6, 6, 5, 5, 5, 5, 5, 4}));
  CHECK(!class_equality({1, 1, 2}, {2, 1, 1}));
  CHECK(class_equality({1, 1}, {2, 0}));
  CHECK_THROWS_AS(class_equality({2, 0}, {2, 0}), std::invalid_argument);

  // structural test against brute force on all realizable 2x2 margins
  for (int r0 = 0; r0 <= 2; ++r0)
    for (int r1 = 0; r1 <= 2; ++r1)
      for (int s0 = 0; s0 <= 2; ++s0) {
        const int s1 = r0 + r1 - s0;
        if (s1 < 0 || s1 > 2) continue;
        const std::vector<int> r{r0, r1}, s{s0, s1};
        if (!gale_ryser_nonempty(r, s)) continue;
        bool any_minus = false;
        for (const SignMatrix& x : enumerate_pm_class({r, s}))
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) any_minus |= x(i, j) == -1;
        CHECK(class_equality(r, s) == !any_minus);
      }
}

TEST_CASE("Gale-Ryser helpers") {
  CHECK(gale_ryser_nonempty({2, 0}, {1, 1}));
  CHECK(gale_ryser_nonempty({2, 2}, {2, 2}));
  CHECK(!gale_ryser_nonempty({2, 0}, {2, 0}));
  CHECK(!gale_ryser_nonempty({1}, {0}));
  const auto a = gale_ryser_realization({2, 1}, {2, 1});
  REQUIRE(a.has_value());
  CHECK(margins(*a) == MarginPair{{2, 1}, {2, 1}});
}
