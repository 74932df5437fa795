#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "pathcrystal/partition.hpp"
#include "pathcrystal/qpoly.hpp"
#include "pathcrystal/schur_expansion.hpp"
#include "pathcrystal/tableau.hpp"

using namespace pathcrystal;

TEST_CASE("Laurent polynomial arithmetic") {
  const QPoly one(1);
  const QPoly q = QPoly::q_power(1);
  const QPoly p = one + q;  // 1 + q

  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 1);
  CHECK(p.coeff(2) == 0);
  CHECK(p.at_one() == 2);
  CHECK(p.min_exp() == 0);
  CHECK(p.max_exp() == 1);

  CHECK((p * p).str() == "1+2q+q^2");
  CHECK((p - p).is_zero());
  CHECK((p - p).str() == "0");
  CHECK(p.shifted(2).str() == "q^2+q^3");
  CHECK(p.shifted(-1).str() == "q^-1+1");
  CHECK(p.inverted_q().str() == "q^-1+1");
  CHECK(QPoly::q_power(3, 2).str() == "2q^3");
  CHECK((one - q - q).str() == "1-2q");
  CHECK(QPoly::from_terms({{2, 0}, {1, 5}}) == QPoly::q_power(1, 5));
}

TEST_CASE("Laurent polynomial json round trip") {
  const QPoly p = QPoly(3) + QPoly::q_power(-2) - QPoly::q_power(4, 7);
  CHECK(QPoly::from_json(p.to_json()) == p);
}

TEST_CASE("partition basics") {
  const Partition p({3, 2, 1});
  CHECK(p.size() == 6);
  CHECK(p.length() == 3);
  CHECK(p.part(0) == 3);
  CHECK(p.part(5) == 0);
  CHECK(p.str() == "3,2,1");
  CHECK(Partition::parse("3,2,1") == p);
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({3, 2, 1, 0, 0}) == p);
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("conjugation") {
  CHECK(Partition({3, 2, 1}).conjugate() == Partition({3, 2, 1}));
  CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
  CHECK(Partition({3, 1, 1}).conjugate() == Partition({3, 1, 1}));
  CHECK(Partition({5}).conjugate() == Partition({1, 1, 1, 1, 1}));
  CHECK(Partition().conjugate() == Partition());
  for (const Partition& lam : partitions_of(7))
    CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("dominance order") {
  CHECK(Partition({3}).dominates(Partition({2, 1})));
  CHECK(Partition({2, 1}).dominates(Partition({1, 1, 1})));
  CHECK(Partition({3}).dominates(Partition({3})));
  CHECK_FALSE(Partition({2, 1}).dominates(Partition({3})));
  // An incomparable pair.
  CHECK_FALSE(Partition({3, 3}).dominates(Partition({4, 1, 1})));
  CHECK_FALSE(Partition({4, 1, 1}).dominates(Partition({3, 3})));
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(6, 3).size() == 7);   // at most three parts
  CHECK(partitions_of(6, -1, 2).size() == 4);  // parts at most 2
  const auto all = partitions_of(5);
  for (std::size_t i = 0; i + 1 < all.size(); ++i)
    CHECK(all[i].parts() > all[i + 1].parts());  // fixed enumeration order
  for (const Partition& lam : all) CHECK(lam.size() == 5);
}

TEST_CASE("schur expansion bookkeeping") {
  SchurExpansion e;
  CHECK(e.empty());
  e.add(Partition({2, 1}), QPoly(1));
  e.add(Partition({2, 1}), QPoly::q_power(1));
  e.add(Partition({3}), QPoly::q_power(2));
  CHECK(e.at(Partition({2, 1})).str() == "1+q");
  CHECK(e.at(Partition({1, 1, 1})).is_zero());
  CHECK(e.terms().size() == 2);

  // Adding the negative removes the stored key entirely.
  SchurExpansion f = e;
  f.add(Partition({3}), QPoly(0) - QPoly::q_power(2));
  CHECK(f.terms().size() == 1);

  CHECK(e.scaled(1).at(Partition({3})) == QPoly::q_power(3));
  CHECK(e.inverted_q().at(Partition({2, 1})).str() == "q^-1+1");
  CHECK(e.diff(e).empty());
  CHECK_FALSE(e.diff(f).empty());
  CHECK(e == e);
  CHECK_FALSE(e == f);
}

TEST_CASE("dimension-weighted evaluation at q equal one") {
  SchurExpansion e;
  e.add(Partition({2, 1}), QPoly(1) + QPoly::q_power(1));
  e.add(Partition({3}), QPoly::q_power(2));
  // Entries at most 2: shape (2,1) has 2 fillings, shape (3) has 4.
  CHECK(schur_dim(Partition({2, 1}), 2) == 2);
  CHECK(schur_dim(Partition({3}), 2) == 4);
  CHECK(e.q1_dim_sum(2) == 2 * 2 + 1 * 4);
}
