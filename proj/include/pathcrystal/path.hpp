#ifndef PATHCRYSTAL_PATH_HPP
#define PATHCRYSTAL_PATH_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathcrystal/crystal.hpp"

namespace pathcrystal {

// Raised when a lowering operator is directed at the frozen head, i.e. the
// truncation was chosen too short for the requested closure.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite truncation of a semi-infinite path.  The head stands for the whole
// frozen tail: a formal factor u_lambda with eps_i = 0 and
// phi_i = <lambda, h_i>.  body[0] sits next to the head (the deepest
// position); body.back() is the rightmost factor.
struct TruncatedPath {
  std::vector<int> head;  // lambda as coefficients on Lambda_0..Lambda_{n-1}
  std::vector<CrystalElem> body;

  int n() const { return static_cast<int>(head.size()); }
  int head_level() const;

  auto operator<=>(const TruncatedPath&) const = default;
};

// Kashiwara operator on the tensor product via the signature rule: factors
// contribute eps_i minuses then phi_i pluses, scanning head first; adjacent
// +- pairs cancel; a raise acts where the last surviving minus came from, a
// lower where the first surviving plus came from.  Returns nullopt when no
// sign survives.  Throws TruncationError when a lower picks the head.
std::optional<TruncatedPath> tensor_apply(int i, Dir dir,
                                          const TruncatedPath& p);

// Like tensor_apply, but a lowering directed at the frozen head counts as
// leaving the modeled region: returns nullopt instead of throwing.  Closures
// must use the throwing version; graph restrictions use this one.
std::optional<TruncatedPath> tensor_apply_clamped(int i, Dir dir,
                                                  const TruncatedPath& p);

// Surviving minus/plus counts of the signature scan.
std::pair<int, int> eps_phi(int i, const TruncatedPath& p);

ClWeight weight(const TruncatedPath& p);

TruncatedPath rotate_labels(int s, const TruncatedPath& p);

std::string encode(const TruncatedPath& p);  // "u[1,0] | 0,1 | 1,0"

// Paths killed by every classical raising operator i = 1..n-1.
std::vector<TruncatedPath> classical_highest(
    const std::vector<TruncatedPath>& nodes);

}  // namespace pathcrystal

#endif
