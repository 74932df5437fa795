#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "pathcrystal/partition.hpp"
#include "pathcrystal/qpoly.hpp"
#include "pathcrystal/tableau.hpp"

using namespace pathcrystal;

TEST_CASE("tableau validation and accessors") {
  const Tableau t({{1, 1, 2}, {2, 3}});
  CHECK(t.shape() == Partition({3, 2}));
  CHECK(t.content() == std::vector<int>{2, 2, 1});
  CHECK(t.reading_word() == std::vector<int>{2, 3, 1, 1, 2});
  CHECK(t.str() == "[[1,1,2],[2,3]]");

  CHECK_THROWS(Tableau({{2, 1}}));          // row must weakly increase
  CHECK_THROWS(Tableau({{1, 1}, {1}}));     // column must strictly increase
  CHECK_THROWS(Tableau({{1}, {2, 2}}));     // shape must be a partition
  CHECK_THROWS(Tableau({{0, 1}}));          // letters start at 1
}

TEST_CASE("charge of words") {
  // Standard words of content (1,1,1): the decreasing word has charge 0, the
  // increasing word the maximum n(n-1)/2.
  CHECK(charge(std::vector<int>{3, 2, 1}) == 0);
  CHECK(charge(std::vector<int>{1, 2, 3}) == 3);
  CHECK(charge(std::vector<int>{2, 1, 3}) == 1);
  CHECK(charge(std::vector<int>{1, 3, 2}) == 2);
  CHECK(charge(std::vector<int>{1}) == 0);

  // Multiple extracted subwords.
  CHECK(charge(std::vector<int>{2, 1, 1}) == 0);
  CHECK(charge(std::vector<int>{1, 1, 2}) == 1);
  CHECK(charge(std::vector<int>{2, 3, 1, 1, 1, 2}) == 2);
}

TEST_CASE("charge of tableaux") {
  CHECK(charge(Tableau({{1, 1}, {2}})) == 0);
  CHECK(charge(Tableau({{1, 1, 2}})) == 1);
  CHECK(charge(Tableau({{1, 1, 1, 2}, {2, 3}})) == 2);
  CHECK(charge(Tableau({{1, 2}})) == 1);
}

TEST_CASE("row packed tableau") {
  CHECK(row_packed_tableau(Partition({3, 2, 1}), 4).str() ==
        "[[1,1,1,2],[2,3]]");
  CHECK(row_packed_tableau(Partition({2, 1}), 3).str() == "[[1,1,2]]");
  CHECK(row_packed_tableau(Partition({1, 1}), 2).str() == "[[1,2]]");
  CHECK(row_packed_tableau(Partition({2, 2, 1}), 3).str() ==
        "[[1,1,2],[2,3]]");
}

TEST_CASE("semistandard enumeration and Kostka numbers") {
  const auto two_one = enumerate_ssyt(Partition({2, 1}), {1, 1, 1});
  CHECK(two_one.size() == 2);
  for (const Tableau& t : two_one) {
    CHECK(t.shape() == Partition({2, 1}));
    CHECK(t.content() == std::vector<int>{1, 1, 1});
  }
  std::set<std::string> reprs;
  for (const Tableau& t : two_one) reprs.insert(t.str());
  CHECK(reprs ==
        std::set<std::string>{"[[1,2],[3]]", "[[1,3],[2]]"});

  CHECK(kostka_number(Partition({3}), {1, 1, 1}) == 1);
  CHECK(kostka_number(Partition({2, 1}), {1, 1, 1}) == 2);
  CHECK(kostka_number(Partition({1, 1, 1}), {1, 1, 1}) == 1);
  CHECK(kostka_number(Partition({2, 2}), {2, 1, 1}) == 1);
  CHECK(kostka_number(Partition({1, 1, 1}), {2, 1}) == 0);  // not dominated
  CHECK(kostka_number(Partition({4, 2}), {3, 2, 1}) == 2);
}

TEST_CASE("charge-statistic polynomials, frozen values") {
  auto kf = [](std::vector<int> lam, std::vector<int> mu) {
    return kostka_foulkes(Partition(std::move(lam)), Partition(std::move(mu)))
        .str();
  };
  CHECK(kf({2, 1}, {1, 1, 1}) == "q+q^2");
  CHECK(kf({3}, {1, 1, 1}) == "q^3");
  CHECK(kf({1, 1, 1}, {1, 1, 1}) == "1");
  CHECK(kf({2}, {1, 1}) == "q");
  CHECK(kf({4}, {2, 2}) == "q^2");
  CHECK(kf({3, 1}, {2, 2}) == "q");
  CHECK(kf({2, 2}, {2, 2}) == "1");
  CHECK(kf({4, 2}, {3, 2, 1}) == "q+q^2");
  CHECK(kf({4, 1, 1}, {3, 2, 1}) == "q");
  CHECK(kf({3, 3}, {3, 2, 1}) == "q");
  CHECK(kf({3, 2, 1}, {3, 2, 1}) == "1");
  CHECK(kf({1, 1, 1}, {2, 1}) == "0");
}

TEST_CASE("charge-statistic polynomial properties") {
  for (int N = 1; N <= 6; ++N)
    for (const Partition& lam : partitions_of(N))
      for (const Partition& mu : partitions_of(N)) {
        const QPoly p = kostka_foulkes(lam, mu);
        // Evaluation at q = 1 counts the fillings.
        CHECK(p.at_one() == kostka_number(lam, mu.parts()));
        if (lam == mu) CHECK(p == QPoly(1));
        if (!lam.dominates(mu)) CHECK(p.is_zero());
        if (!p.is_zero()) CHECK(p.min_exp() >= 0);
      }
}

TEST_CASE("graded multiplicity generating function") {
  const SchurExpansion m = milne(Partition({1, 1, 1}), 3);
  CHECK(m.at(Partition({3})).str() == "q^3");
  CHECK(m.at(Partition({2, 1})).str() == "q+q^2");
  CHECK(m.at(Partition({1, 1, 1})).str() == "1");

  // Row restriction: shapes longer than n are absent.
  const SchurExpansion m2 = milne(Partition({1, 1, 1}), 2);
  CHECK(m2.at(Partition({1, 1, 1})).is_zero());
  CHECK(m2.at(Partition({2, 1})).str() == "q+q^2");

  // At q = 1 the dimension-weighted sum is the product of complete
  // homogeneous dimensions, one binomial per part.
  auto binom = [](long long a, long long b) {
    long long r = 1;
    for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int n = 2; n <= 3; ++n)
    for (int N = 1; N <= 5; ++N)
      for (const Partition& mu : partitions_of(N)) {
        long long expect = 1;
        for (int part : mu.parts()) expect *= binom(n + part - 1, part);
        CHECK(milne(mu, n).q1_dim_sum(n) == expect);
      }
}

TEST_CASE("filling counts with bounded entries") {
  CHECK(schur_dim(Partition({1}), 4) == 4);
  CHECK(schur_dim(Partition({2, 1}), 3) == 8);
  CHECK(schur_dim(Partition({2, 2}), 2) == 1);
  CHECK_THROWS_AS(schur_dim(Partition({1, 1, 1}), 2), std::invalid_argument);
  CHECK(schur_dim(Partition(), 3) == 1);
}
