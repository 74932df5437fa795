#ifndef PATHCRYSTAL_WEIGHT_HPP
#define PATHCRYSTAL_WEIGHT_HPP

#include <compare>
#include <string>
#include <vector>

namespace pathcrystal {

// Classical weight of an element or path: content[j] counts letter j+1, and
// level is the coefficient of the affine degree (0 for bare crystal
// elements, the head level for truncated paths).
struct ClWeight {
  std::vector<int> content;
  int level = 0;

  int n() const { return static_cast<int>(content.size()); }

  // <wt, h_i>; the i=0 pairing folds in the level so that
  // phi_i - eps_i = pairing(i) holds for paths as well.
  int pairing(int i) const;

  auto operator<=>(const ClWeight&) const = default;
  std::string str() const;
};

}  // namespace pathcrystal

#endif
