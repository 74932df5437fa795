#ifndef PATHCRYSTAL_SCHUR_EXPANSION_HPP
#define PATHCRYSTAL_SCHUR_EXPANSION_HPP

#include <map>
#include <string>

#include "json.hpp"
#include "pathcrystal/partition.hpp"
#include "pathcrystal/qpoly.hpp"

namespace pathcrystal {

// Finite sum  sum_lambda  c_lambda(q) * s_lambda  with Laurent-polynomial
// coefficients.  Zero coefficients are never stored.
class SchurExpansion {
 public:
  void add(const Partition& key, const QPoly& coeff);
  QPoly at(const Partition& key) const;  // zero if absent
  const std::map<Partition, QPoly>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  SchurExpansion scaled(int e) const;      // multiply every coefficient by q^e
  SchurExpansion inverted_q() const;       // q -> q^{-1} in every coefficient

  // Sum of coefficients at q=1 weighted by the number of semistandard
  // tableaux with entries at most n (the classical dimension count).
  long long q1_dim_sum(int n) const;

  bool operator==(const SchurExpansion&) const = default;

  // {"3,2": "1+q", ...}: partition keys, polynomial strings.
  nlohmann::json to_json() const;
  std::string str() const;

  // Human-readable difference listing, empty when equal.
  std::string diff(const SchurExpansion& o) const;

 private:
  std::map<Partition, QPoly> terms_;
};

}  // namespace pathcrystal

#endif
