#include "pathcrystal/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace pathcrystal {

int ClWeight::pairing(int i) const {
  int nn = n();
  if (nn == 0) throw std::domain_error("pairing of empty weight");
  int r = ((i % nn) + nn) % nn;
  if (r == 0) return level + content[nn - 1] - content[0];
  return content[r - 1] - content[r];
}

std::string ClWeight::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t j = 0; j < content.size(); ++j) {
    if (j) out << ',';
    out << content[j];
  }
  out << ')';
  if (level != 0) out << "@" << level;
  return out.str();
}

}  // namespace pathcrystal
