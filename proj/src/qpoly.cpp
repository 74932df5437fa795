#include "pathcrystal/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace pathcrystal {

QPoly::QPoly(long long constant) {
  if (constant != 0) terms_[0] = constant;
}

QPoly QPoly::q_power(int e, long long c) {
  QPoly p;
  if (c != 0) p.terms_[e] = c;
  return p;
}

QPoly QPoly::from_terms(std::map<int, long long> terms) {
  QPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_[e] = c;
  return p;
}

long long QPoly::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

long long QPoly::at_one() const {
  long long s = 0;
  for (auto& [e, c] : terms_) s += c;
  return s;
}

int QPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

int QPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (auto& [e, c] : o.terms_) {
    long long v = (terms_[e] += c);
    if (v == 0) terms_.erase(e);
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (auto& [e, c] : o.terms_) {
    long long v = (terms_[e] -= c);
    if (v == 0) terms_.erase(e);
  }
  return *this;
}

QPoly QPoly::operator+(const QPoly& o) const {
  QPoly r = *this;
  r += o;
  return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
  QPoly r = *this;
  r -= o;
  return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
  QPoly r;
  for (auto& [e1, c1] : terms_)
    for (auto& [e2, c2] : o.terms_) {
      long long v = (r.terms_[e1 + e2] += c1 * c2);
      if (v == 0) r.terms_.erase(e1 + e2);
    }
  return r;
}

QPoly QPoly::shifted(int e) const {
  QPoly r;
  for (auto& [e0, c] : terms_) r.terms_[e0 + e] = c;
  return r;
}

QPoly QPoly::inverted_q() const {
  QPoly r;
  for (auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

std::string QPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    long long a = c;
    if (first) {
      if (a < 0) {
        out << '-';
        a = -a;
      }
    } else {
      out << (a < 0 ? '-' : '+');
      if (a < 0) a = -a;
    }
    if (e == 0) {
      out << a;
    } else {
      if (a != 1) out << a;
      out << 'q';
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

nlohmann::json QPoly::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (auto& [e, c] : terms_) j[std::to_string(e)] = c;
  return j;
}

QPoly QPoly::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("QPoly json must be an object");
  QPoly p;
  for (auto& [k, v] : j.items()) {
    int e = std::stoi(k);
    long long c = v.get<long long>();
    if (c != 0) p.terms_[e] = c;
  }
  return p;
}

}  // namespace pathcrystal
