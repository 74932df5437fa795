#ifndef PATHCRYSTAL_ENERGY_HPP
#define PATHCRYSTAL_ENERGY_HPP

#include <map>
#include <optional>
#include <utility>

#include "json.hpp"
#include "pathcrystal/crystal.hpp"
#include "pathcrystal/path.hpp"

namespace pathcrystal {

using ElemPair = std::pair<CrystalElem, CrystalElem>;

// Kashiwara operator on a bare two-factor tensor x (x) y.
std::optional<ElemPair> pair_apply(int i, Dir dir, const ElemPair& p);

// True iff a raise in direction i would act on the left factor
// (phi_i(left) >= eps_i(right)); meaningful whether or not the raise lives.
bool raise_acts_left(int i, const ElemPair& p);

// The operator-commuting bijection B1 (x) B2 -> B2 (x) B1, anchored at the
// pair of classical highest elements and propagated along the affine graph.
class RMap {
 public:
  RMap(Crystal b1, Crystal b2, std::map<ElemPair, ElemPair> table);

  const Crystal& b1() const { return b1_; }
  const Crystal& b2() const { return b2_; }
  const ElemPair& apply(const ElemPair& p) const;
  const std::map<ElemPair, ElemPair>& table() const { return table_; }

  nlohmann::json to_json() const;

 private:
  Crystal b1_, b2_;
  std::map<ElemPair, ElemPair> table_;
};

// Builds the bijection by anchored breadth-first propagation; verifies
// weight preservation, bijectivity, and full coverage (connectivity), and
// fails on any propagation conflict.
RMap combinatorial_R(const Crystal& b1, const Crystal& b2);

// Energy values on B1 (x) B2, normalized to 0 at the classical-highest
// anchor; constant along classical edges, stepping by the 0-edge local rule.
class EnergyTable {
 public:
  EnergyTable(Crystal b1, Crystal b2, ElemPair anchor,
              std::map<ElemPair, long long> values);

  const Crystal& b1() const { return b1_; }
  const Crystal& b2() const { return b2_; }
  const ElemPair& anchor() const { return anchor_; }
  long long at(const ElemPair& p) const;
  const std::map<ElemPair, long long>& values() const { return values_; }

  nlohmann::json to_json() const;

 private:
  Crystal b1_, b2_;
  ElemPair anchor_;
  std::map<ElemPair, long long> values_;
};

EnergyTable energy_table(const Crystal& b1, const Crystal& b2, const RMap& r);

// Caches R-maps and energy tables per crystal pair.
class TableCache {
 public:
  const RMap& r_map(const Crystal& b1, const Crystal& b2);
  const EnergyTable& table(const Crystal& b1, const Crystal& b2);

 private:
  std::map<std::pair<Crystal, Crystal>, RMap> rmaps_;
  std::map<std::pair<Crystal, Crystal>, EnergyTable> tables_;
};

// Tail-regularized energy of a homogeneous path relative to its ground:
//   D(p) = sum_{j>=1} j * [H(x_{j+1} (x) x_j) - H(g_{j+1} (x) g_j)]
// where positions count from the right, x_{J+1} and g_{J+1} are both the
// frozen element `beyond`, so every term past the truncation vanishes.
// pre: p and ground share head and length.
long long homogeneous_energy(const TruncatedPath& p, const TruncatedPath& ground,
                             const CrystalElem& beyond, const EnergyTable& t);

// Promoted factors b_j^(i): column j of the returned table holds
// b_j^(j) = b_j and, descending, the left output of the bijection applied to
// (b_i, b_j^(i+1)).  body is (b_1, ..., b_m) with b_1 head-adjacent.
// Entry [j][i] (1-based j, i <= j) is stored at [j-1][i-1].
std::vector<std::vector<CrystalElem>> promoted_factors(
    const std::vector<CrystalElem>& body, TableCache& cache);

// Inhomogeneous path energy: the double sum of pair energies
// H(b_i (x) b_j^(i+1)) over 1 <= i < j <= m.
long long inhomogeneous_energy(const std::vector<CrystalElem>& body,
                               TableCache& cache);

// The inner sum for one fixed j (positions i < j), used by the per-position
// energy-step assertions.
long long inhomogeneous_energy_at(const std::vector<CrystalElem>& body, int j,
                                  TableCache& cache);

}  // namespace pathcrystal

#endif
