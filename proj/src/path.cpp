#include "pathcrystal/path.hpp"

#include <numeric>
#include <sstream>

namespace pathcrystal {

int TruncatedPath::head_level() const {
  return std::accumulate(head.begin(), head.end(), 0);
}

namespace {

// Signature scan over head and body.  Factor index -1 is the head; body
// factors are 0..m-1.  Returns the acting factor for the requested direction
// (or none) and, via out parameters, the surviving counts.
struct Scan {
  int surviving_minus = 0;
  int surviving_plus = 0;
  int raise_factor = -2;  // factor owning the last surviving minus; -2 none
  int lower_factor = -2;  // factor owning the first surviving plus; -2 none
};

Scan scan_signature(int i, const TruncatedPath& p) {
  Scan s;
  // Stack discipline: a minus cancels the nearest plus to its left.  Only
  // the owner of each surviving sign is needed, so pluses are kept as a
  // count per factor on a stack.
  std::vector<std::pair<int, int>> plus_stack;  // (factor, count), in order
  int minus_count = 0;
  int last_minus_factor = -2;
  auto emit = [&](int factor, int e, int f) {
    for (int t = 0; t < e; ++t) {
      if (!plus_stack.empty()) {
        if (--plus_stack.back().second == 0) plus_stack.pop_back();
      } else {
        ++minus_count;
        last_minus_factor = factor;
      }
    }
    if (f > 0) plus_stack.push_back({factor, f});
  };
  int nn = p.n();
  emit(-1, 0, [&] {
    int r = ((i % nn) + nn) % nn;
    return p.head[r];
  }());
  for (std::size_t j = 0; j < p.body.size(); ++j)
    emit(static_cast<int>(j), eps(i, p.body[j]), phi(i, p.body[j]));
  s.surviving_minus = minus_count;
  for (auto& [f, c] : plus_stack) s.surviving_plus += c;
  if (minus_count > 0) s.raise_factor = last_minus_factor;
  if (!plus_stack.empty()) s.lower_factor = plus_stack.front().first;
  return s;
}

}  // namespace

std::optional<TruncatedPath> tensor_apply(int i, Dir dir,
                                          const TruncatedPath& p) {
  Scan s = scan_signature(i, p);
  int factor = dir == Dir::raise_op ? s.raise_factor : s.lower_factor;
  if (factor == -2) return std::nullopt;
  if (factor == -1) {
    if (dir == Dir::lower_op)
      throw TruncationError("lowering operator reached the frozen head");
    return std::nullopt;  // the head absorbs no raising operator
  }
  TruncatedPath out = p;
  std::optional<CrystalElem> nb = apply(i, dir, p.body[factor]);
  if (!nb)
    throw std::logic_error("signature rule pointed at a dead factor");
  out.body[factor] = *nb;
  return out;
}

std::optional<TruncatedPath> tensor_apply_clamped(int i, Dir dir,
                                                  const TruncatedPath& p) {
  try {
    return tensor_apply(i, dir, p);
  } catch (const TruncationError&) {
    return std::nullopt;
  }
}

std::pair<int, int> eps_phi(int i, const TruncatedPath& p) {
  Scan s = scan_signature(i, p);
  return {s.surviving_minus, s.surviving_plus};
}

ClWeight weight(const TruncatedPath& p) {
  int nn = p.n();
  ClWeight w;
  w.content.assign(nn, 0);
  w.level = p.head_level();
  // Lambda_r contributes one box in each of the first r letter slots.
  for (int r = 1; r < nn; ++r)
    for (int j = 0; j < r; ++j) w.content[j] += p.head[r];
  for (const CrystalElem& b : p.body) {
    ClWeight wb = weight(b);
    for (int j = 0; j < nn; ++j) w.content[j] += wb.content[j];
  }
  return w;
}

TruncatedPath rotate_labels(int s, const TruncatedPath& p) {
  int nn = p.n();
  TruncatedPath out;
  out.head.assign(nn, 0);
  for (int r = 0; r < nn; ++r)
    out.head[(((r + s) % nn) + nn) % nn] = p.head[r];
  for (const CrystalElem& b : p.body)
    out.body.push_back(rotate_labels(s, b));
  return out;
}

std::string encode(const TruncatedPath& p) {
  std::ostringstream out;
  out << "u[";
  for (int r = 0; r < p.n(); ++r) {
    if (r) out << ',';
    out << p.head[r];
  }
  out << ']';
  for (const CrystalElem& b : p.body) out << " | " << encode(b);
  return out.str();
}

std::vector<TruncatedPath> classical_highest(
    const std::vector<TruncatedPath>& nodes) {
  std::vector<TruncatedPath> out;
  for (const TruncatedPath& p : nodes) {
    bool highest = true;
    for (int i = 1; i < p.n() && highest; ++i)
      if (tensor_apply(i, Dir::raise_op, p)) highest = false;
    if (highest) out.push_back(p);
  }
  return out;
}

}  // namespace pathcrystal
