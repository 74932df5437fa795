#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <optional>
#include <vector>

#include "pathcrystal/crystal.hpp"
#include "pathcrystal/demazure.hpp"
#include "pathcrystal/energy.hpp"
#include "pathcrystal/partition.hpp"
#include "pathcrystal/path.hpp"
#include "pathcrystal/tableau.hpp"

using namespace pathcrystal;

namespace {

CrystalElem row(std::vector<int> counts) { return RowElem{std::move(counts)}; }

CrystalElem col(int n, std::vector<int> letters) {
  return ColElem{n, std::move(letters)};
}

std::vector<std::pair<Crystal, Crystal>> crystal_pairs() {
  std::vector<std::vector<Crystal>> by_rank = {
      {Crystal(2, 1, 1), Crystal(2, 1, 2)},
      {Crystal(3, 1, 1), Crystal(3, 1, 2), Crystal(3, 2, 1)},
      {Crystal(4, 1, 1), Crystal(4, 2, 1), Crystal(4, 3, 1)}};
  std::vector<std::pair<Crystal, Crystal>> out;
  for (const auto& group : by_rank)
    for (const Crystal& c1 : group)
      for (const Crystal& c2 : group) out.push_back({c1, c2});
  return out;
}

std::vector<ElemPair> all_pairs(const Crystal& b1, const Crystal& b2) {
  std::vector<ElemPair> out;
  for (const CrystalElem& x : b1.elements())
    for (const CrystalElem& y : b2.elements()) out.push_back({x, y});
  return out;
}

}  // namespace

TEST_CASE("two-factor rule, frozen decisions") {
  const CrystalElem a = row({1, 0});
  const CrystalElem b = row({0, 1});
  CHECK(pair_apply(1, Dir::lower_op, {a, a}) == ElemPair{b, a});  // acts left
  CHECK(pair_apply(1, Dir::lower_op, {b, a}) == ElemPair{b, b});  // acts right
  CHECK(pair_apply(1, Dir::lower_op, {b, b}) == std::nullopt);
  CHECK(pair_apply(1, Dir::raise_op, {b, a}) == ElemPair{a, a});
  CHECK(raise_acts_left(0, {a, a}) == false);
  CHECK(raise_acts_left(1, {a, b}) == true);
  CHECK(raise_acts_left(1, {b, b}) == false);
}

TEST_CASE("the exchange map fixes a square of identical factors") {
  for (const Crystal& c :
       {Crystal(2, 1, 1), Crystal(3, 1, 2), Crystal(3, 2, 1)}) {
    const RMap r = combinatorial_R(c, c);
    for (const ElemPair& p : all_pairs(c, c)) CHECK(r.apply(p) == p);
  }
}

TEST_CASE("exchange map, frozen values on mixed widths") {
  const Crystal b1(2, 1, 1), b2(2, 1, 2);
  const RMap r = combinatorial_R(b1, b2);
  // Classical highest pairs exchange by weight matching.
  CHECK(r.apply({row({1, 0}), row({2, 0})}) == ElemPair{row({2, 0}), row({1, 0})});
  CHECK(r.apply({row({1, 0}), row({1, 1})}) == ElemPair{row({2, 0}), row({0, 1})});
  CHECK_THROWS(r.apply({row({2, 0}), row({1, 0})}));  // wrong side
}

TEST_CASE("exchange map structural properties") {
  for (const auto& [c1, c2] : crystal_pairs()) {
    const RMap r12 = combinatorial_R(c1, c2);
    const RMap r21 = combinatorial_R(c2, c1);
    std::map<ElemPair, int> image_count;
    for (const ElemPair& p : all_pairs(c1, c2)) {
      const ElemPair q = r12.apply(p);
      CHECK(c2.contains(q.first));
      CHECK(c1.contains(q.second));
      ++image_count[q];
      // Weight preservation factor by factor sum.
      ClWeight wp = weight(p.first), wq = weight(q.first);
      for (int t = 0; t < wp.n(); ++t) {
        wp.content[t] += weight(p.second).content[t];
        wq.content[t] += weight(q.second).content[t];
      }
      CHECK(wp == wq);
      // Applying the reverse map returns the original pair.
      CHECK(r21.apply(q) == p);
    }
    CHECK(image_count.size() == all_pairs(c1, c2).size());  // bijective
  }
}

TEST_CASE("exchange map commutes with every operator") {
  for (const auto& [c1, c2] : crystal_pairs()) {
    const RMap r = combinatorial_R(c1, c2);
    for (const ElemPair& p : all_pairs(c1, c2))
      for (int i = 0; i < c1.n(); ++i)
        for (Dir dir : {Dir::lower_op, Dir::raise_op}) {
          const auto moved = pair_apply(i, dir, p);
          const auto mapped = pair_apply(i, dir, r.apply(p));
          if (moved)
            CHECK(mapped == r.apply(*moved));
          else
            CHECK(mapped == std::nullopt);
        }
  }
}

TEST_CASE("local energy, frozen single-box table") {
  const Crystal c(2, 1, 1);
  const EnergyTable t = energy_table(c, c, combinatorial_R(c, c));
  const CrystalElem a = row({1, 0});
  const CrystalElem b = row({0, 1});
  CHECK(t.at({a, a}) == 0);
  CHECK(t.at({a, b}) == -1);
  CHECK(t.at({b, a}) == 0);
  CHECK(t.at({b, b}) == 0);
}

TEST_CASE("local energy, frozen two-box table") {
  const Crystal c(2, 1, 2);
  const EnergyTable t = energy_table(c, c, combinatorial_R(c, c));
  const CrystalElem A = row({2, 0});
  const CrystalElem B = row({1, 1});
  const CrystalElem C = row({0, 2});
  CHECK(t.at({A, A}) == 0);
  CHECK(t.at({B, A}) == 0);
  CHECK(t.at({C, A}) == 0);
  CHECK(t.at({C, B}) == 0);
  CHECK(t.at({C, C}) == 0);
  CHECK(t.at({A, B}) == -1);
  CHECK(t.at({B, B}) == -1);
  CHECK(t.at({B, C}) == -1);
  CHECK(t.at({A, C}) == -2);
}

TEST_CASE("local energy, frozen mixed-width values") {
  const Crystal b1(2, 1, 1), b2(2, 1, 2);
  const EnergyTable t = energy_table(b1, b2, combinatorial_R(b1, b2));
  CHECK(t.at({row({1, 0}), row({2, 0})}) == 0);
  CHECK(t.at({row({1, 0}), row({1, 1})}) == -1);
  CHECK(t.at({row({1, 0}), row({0, 2})}) == -1);
}

TEST_CASE("local energy is constant on classical edges and steps on affine ones") {
  for (const auto& [c1, c2] : crystal_pairs()) {
    const RMap r = combinatorial_R(c1, c2);
    const EnergyTable t = energy_table(c1, c2, r);
    CHECK(t.at(t.anchor()) == 0);
    for (const ElemPair& p : all_pairs(c1, c2)) {
      for (int i = 1; i < c1.n(); ++i)
        if (const auto q = pair_apply(i, Dir::lower_op, p))
          CHECK(t.at(*q) == t.at(p));
      if (const auto q = pair_apply(0, Dir::raise_op, p)) {
        const bool left_here = raise_acts_left(0, p);
        const bool left_there = raise_acts_left(0, r.apply(p));
        long long step = 0;
        if (left_here && left_there) step = 1;
        if (!left_here && !left_there) step = -1;
        CHECK(t.at(*q) - t.at(p) == step);
      }
    }
  }
}

TEST_CASE("tail-regularized energy, frozen three-factor values") {
  const DemazureSetup setup(2, 1, 1, 3);
  const TruncatedPath ground = setup.ground_state_path(3);
  CHECK(encode(ground) == "u[1,0] | 1,0 | 0,1 | 1,0");
  const CrystalElem beyond = setup.ground_elem(4);
  CHECK(beyond == row({0, 1}));

  const Crystal c = setup.factor();
  const EnergyTable t = energy_table(c, c, combinatorial_R(c, c));
  auto D = [&](const TruncatedPath& p) {
    return homogeneous_energy(p, ground, beyond, t);
  };
  CHECK(D(ground) == 0);
  CHECK(D(TruncatedPath{{1, 0}, {row({1, 0}), row({1, 0}), row({0, 1})}}) == 1);
  CHECK(D(TruncatedPath{{1, 0}, {row({1, 0}), row({1, 0}), row({1, 0})}}) == 2);
}

TEST_CASE("affine raises lower the tail-regularized energy by one") {
  for (auto [n, l, L] : {std::tuple{2, 1, 3}, {3, 2, 2}, {3, 1, 3}}) {
    const DemazureSetup setup(n, 1, l, L);
    const TruncatedPath ground = setup.ground_state_path(L);
    const CrystalElem beyond = setup.ground_elem(L + 1);
    const Crystal c = setup.factor();
    const EnergyTable t = energy_table(c, c, combinatorial_R(c, c));
    auto D = [&](const TruncatedPath& p) {
      return homogeneous_energy(p, ground, beyond, t);
    };
    for (const TruncatedPath& p : full_row_model(n, l, L))
      for (int i = 0; i < n; ++i)
        if (const auto q = tensor_apply(i, Dir::raise_op, p))
          CHECK(D(*q) - D(p) == (i == 0 ? -1 : 0));
  }
}

TEST_CASE("promoted factors, frozen values") {
  TableCache cache;
  const std::vector<CrystalElem> body = {row({1, 0}), row({0, 1})};
  const auto table = promoted_factors(body, cache);
  REQUIRE(table.size() == 2);
  CHECK(table[0] == std::vector<CrystalElem>{row({1, 0})});
  CHECK(table[1] == std::vector<CrystalElem>{row({1, 0}), row({0, 1})});
  CHECK(inhomogeneous_energy(body, cache) == -1);
  CHECK(inhomogeneous_energy_at(body, 2, cache) == -1);
  CHECK(inhomogeneous_energy_at(body, 1, cache) == 0);
}

TEST_CASE("pairwise energy of ground chains matches the packed charge") {
  TableCache cache;
  for (auto [n, mu] : {std::pair{2, Partition({1, 1})},
                       {3, Partition({2, 1})},
                       {4, Partition({3, 2, 1})}}) {
    const TruncatedPath g = inhom_ground(n, mu);
    const long long c = charge(row_packed_tableau(mu, n));
    CHECK(inhomogeneous_energy(g.body, cache) == -c);
  }
}

TEST_CASE("affine raises step the pairwise energy by one at a single slot") {
  TableCache cache;
  for (auto [n, mu] : {std::pair{2, Partition({1, 1})},
                       {3, Partition({2, 1})},
                       {4, Partition({3, 2, 1})}}) {
    for (const TruncatedPath& p : inhom_model(n, mu)) {
      const long long before = inhomogeneous_energy(p.body, cache);
      for (int i = 0; i < n; ++i) {
        const auto q = tensor_apply(i, Dir::raise_op, p);
        if (!q) continue;
        const long long after = inhomogeneous_energy(q->body, cache);
        if (i != 0) {
          CHECK(after == before);
          continue;
        }
        CHECK(after == before - 1);
        // Locate the factor the raise moved.
        int moved = -1;
        for (std::size_t t = 0; t < p.body.size(); ++t)
          if (q->body[t] != p.body[t]) {
            CHECK(moved == -1);
            moved = static_cast<int>(t);
          }
        REQUIRE(moved >= 0);
        CHECK(moved >= 1);  // never the head-adjacent factor
        // Only the moved slot's partial sum changes, and by exactly one.
        const int m = static_cast<int>(p.body.size());
        for (int j = 1; j <= m; ++j) {
          const long long pj = inhomogeneous_energy_at(p.body, j, cache);
          const long long qj = inhomogeneous_energy_at(q->body, j, cache);
          CHECK(qj - pj == (j == moved + 1 ? -1 : 0));
        }
      }
    }
  }
}

TEST_CASE("lookup outside a table throws") {
  const Crystal c(2, 1, 1), w(2, 1, 2);
  const RMap r = combinatorial_R(c, c);
  const EnergyTable t = energy_table(c, c, r);
  const ElemPair foreign = {row({2, 0}), row({2, 0})};
  CHECK_THROWS(r.apply(foreign));
  CHECK_THROWS(t.at(foreign));
}
