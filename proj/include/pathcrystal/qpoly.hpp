#ifndef PATHCRYSTAL_QPOLY_HPP
#define PATHCRYSTAL_QPOLY_HPP

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

namespace pathcrystal {

// Laurent polynomial in q with integer coefficients.  Zero coefficients are
// never stored, so equality of the term maps is equality of polynomials.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(long long constant);

  // c * q^e
  static QPoly q_power(int e, long long c = 1);
  static QPoly from_terms(std::map<int, long long> terms);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(int e) const;
  long long at_one() const;  // evaluation at q = 1
  int min_exp() const;       // pre: nonzero
  int max_exp() const;       // pre: nonzero

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;

  QPoly shifted(int e) const;     // multiply by q^e
  QPoly inverted_q() const;       // substitute q -> q^{-1}

  bool operator==(const QPoly& o) const = default;

  const std::map<int, long long>& terms() const { return terms_; }

  // Ascending exponents; "1", "q", "q^2", "q^-1", coefficients prefixed as in
  // "2q^3"; negative terms join with '-'.  Zero prints "0".
  std::string str() const;

  // {"exponent": coefficient} with string keys, e.g. {"0": 1, "1": 1}.
  nlohmann::json to_json() const;
  static QPoly from_json(const nlohmann::json& j);

 private:
  std::map<int, long long> terms_;
};

}  // namespace pathcrystal

#endif
