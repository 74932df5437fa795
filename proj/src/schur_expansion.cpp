#include "pathcrystal/schur_expansion.hpp"

#include <sstream>

#include "pathcrystal/tableau.hpp"

namespace pathcrystal {

void SchurExpansion::add(const Partition& key, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(key, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QPoly SchurExpansion::at(const Partition& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? QPoly() : it->second;
}

SchurExpansion SchurExpansion::scaled(int e) const {
  SchurExpansion out;
  for (auto& [k, v] : terms_) out.terms_[k] = v.shifted(e);
  return out;
}

SchurExpansion SchurExpansion::inverted_q() const {
  SchurExpansion out;
  for (auto& [k, v] : terms_) out.terms_[k] = v.inverted_q();
  return out;
}

long long SchurExpansion::q1_dim_sum(int n) const {
  long long s = 0;
  for (auto& [k, v] : terms_) s += v.at_one() * schur_dim(k, n);
  return s;
}

nlohmann::json SchurExpansion::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [k, v] : terms_) j[k.str()] = v.str();
  return j;
}

std::string SchurExpansion::str() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (auto& [k, v] : terms_) {
    if (!first) out << ", ";
    out << '(' << k.str() << "): " << v.str();
    first = false;
  }
  out << '}';
  return out.str();
}

std::string SchurExpansion::diff(const SchurExpansion& o) const {
  std::ostringstream out;
  for (auto& [k, v] : terms_) {
    QPoly w = o.at(k);
    if (v != w)
      out << "(" << k.str() << "): " << v.str() << " vs " << w.str() << "\n";
  }
  for (auto& [k, w] : o.terms_)
    if (terms_.find(k) == terms_.end())
      out << "(" << k.str() << "): 0 vs " << w.str() << "\n";
  return out.str();
}

}  // namespace pathcrystal
