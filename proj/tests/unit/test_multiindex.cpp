#include <doctest.h>

#include <algorithm>
#include <set>

#include "sgsc/multiindex.hpp"
#include "sgsc/sparsity.hpp"

using namespace sgsc;

TEST_CASE("total degree cardinality equals binomial(N+p, N)") {
  for (std::size_t N = 1; N <= 5; ++N)
    for (int p = 0; p <= 6; ++p) {
      const auto s = total_degree_set(N, p);
      CHECK(s.cardinality() == std::size_t(binomial(std::int64_t(N) + p, std::int64_t(N))));
      CHECK(s.cardinality() == td_cardinality(N, p));
      CHECK(s.is_downward_closed());
    }
}

TEST_CASE("tensor product cardinality is (p+1)^N") {
  for (std::size_t N = 1; N <= 4; ++N)
    for (int p = 0; p <= 4; ++p) {
      std::size_t expect = 1;
      for (std::size_t n = 0; n < N; ++n) expect *= std::size_t(p + 1);
      CHECK(tensor_product_set(N, p).cardinality() == expect);
    }
}

TEST_CASE("graded order starts with the zero index and sorts by degree") {
  const auto s = total_degree_set(3, 4);
  CHECK(s[0].is_zero());
  for (std::size_t i = 1; i < s.cardinality(); ++i) {
    CHECK(graded_less(s[i - 1], s[i]));
    CHECK(s[i - 1].total() <= s[i].total());
  }
  CHECK(graded_less(MultiIndex{1, 0}, MultiIndex{0, 1}));
}

TEST_CASE("position lookup round trips") {
  const auto s = smolyak_set(3, 5);
  for (std::size_t i = 0; i < s.cardinality(); ++i) CHECK(*s.position(s[i]) == i);
  CHECK_FALSE(s.position(MultiIndex{9, 9, 9}).has_value());
  CHECK_FALSE(s.position(MultiIndex{0, 0}).has_value());
}

TEST_CASE("set constructor rejects duplicates and mixed dimensions") {
  CHECK_THROWS_AS(MultiIndexSet(IndexSetKind::Generalized, 0, 2, {MultiIndex{0, 1}, MultiIndex{0, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultiIndexSet(IndexSetKind::Generalized, 0, 2, {MultiIndex{0, 1, 2}}),
                  std::invalid_argument);
}

TEST_CASE("smolyak f values") {
  CHECK(smolyak_f(0) == 0);
  CHECK(smolyak_f(1) == 1);
  CHECK(smolyak_f(2) == 1);
  CHECK(smolyak_f(3) == 2);
  CHECK(smolyak_f(4) == 2);
  CHECK(smolyak_f(5) == 3);
  CHECK(smolyak_f(8) == 3);
  CHECK(smolyak_f(9) == 4);
}

TEST_CASE("smolyak set lies in the tensor set and is downward closed") {
  for (std::size_t N = 1; N <= 4; ++N)
    for (int p = 0; p <= 6; ++p) {
      const auto sm = smolyak_set(N, p);
      const auto tp = tensor_product_set(N, p);
      for (const auto& m : sm) CHECK(tp.contains(m));
      CHECK(sm.is_downward_closed());
    }
}

TEST_CASE("smolyak set is not contained in total degree set") {
  // (4,2): f(4)+f(2) = 3 = f(5) but |(4,2)| = 6 > 5.
  const auto sm = smolyak_set(2, 5);
  CHECK(sm.contains(MultiIndex{4, 2}));
  CHECK_FALSE(total_degree_set(2, 5).contains(MultiIndex{4, 2}));
}

TEST_CASE("one dimensional sets coincide") {
  for (int p = 0; p <= 8; ++p) {
    CHECK(total_degree_set(1, p).indices() == tensor_product_set(1, p).indices());
    CHECK(smolyak_set(1, p).indices() == total_degree_set(1, p).indices());
  }
}

TEST_CASE("growth rules") {
  CHECK(growth(GrowthRule::Linear, 0) == 0);
  CHECK(growth(GrowthRule::Linear, 3) == 3);
  CHECK(growth(GrowthRule::Doubling, 1) == 1);
  CHECK(growth(GrowthRule::Doubling, 2) == 3);
  CHECK(growth(GrowthRule::Doubling, 3) == 5);
  CHECK(growth(GrowthRule::Doubling, 4) == 9);
  for (auto rule : {GrowthRule::Linear, GrowthRule::Doubling})
    for (int q = 1; q <= 40; ++q) {
      const int k = growth_inverse(rule, q);
      CHECK(growth(rule, k) >= q);
      if (k > 1) CHECK(growth(rule, k - 1) < q);
    }
}

TEST_CASE("generalized set with linear growth reproduces classical sets") {
  for (std::size_t N = 1; N <= 3; ++N)
    for (int L = 0; L <= 5; ++L) {
      auto td = generalized_set(N, L, GrowthRule::Linear, LevelFunction::TD);
      std::set<std::vector<int>> a, b;
      for (const auto& m : td) a.insert(m.values());
      for (const auto& m : total_degree_set(N, L)) b.insert(m.values());
      CHECK(a == b);
      if (L >= 1) {
        std::set<std::vector<int>> c, d;
        for (const auto& m : generalized_set(N, L, GrowthRule::Linear, LevelFunction::TP)) c.insert(m.values());
        for (const auto& m : tensor_product_set(N, L - 1)) d.insert(m.values());
        CHECK(c == d);
      } else {
        CHECK(generalized_set(N, L, GrowthRule::Linear, LevelFunction::TP).empty());
        CHECK(generalized_set(N, L, GrowthRule::Linear, LevelFunction::SM).empty());
      }
    }
}

TEST_CASE("generalized sets are downward closed") {
  for (auto rule : {GrowthRule::Linear, GrowthRule::Doubling})
    for (auto g : {LevelFunction::TP, LevelFunction::TD, LevelFunction::SM})
      for (int L = 0; L <= 4; ++L) CHECK(generalized_set(3, L, rule, g).is_downward_closed());
}

TEST_CASE("admissible levels under g_TD") {
  const auto lv = admissible_levels(2, 2, LevelFunction::TD);
  CHECK(lv.size() == 6);
  CHECK(lv[0] == MultiIndex{1, 1});
  for (const auto& l : lv) CHECK(level_value(LevelFunction::TD, l) <= 2);
}
