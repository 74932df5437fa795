#include "pathcrystal/crystal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathcrystal {

namespace {

int umod(int a, int n) {
  int r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

int RowElem::level() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

bool ColElem::contains(int letter) const {
  return std::find(letters.begin(), letters.end(), letter) != letters.end();
}

namespace {

// For direction i, a row lower moves one letter from slot `from` to slot
// `to`; slots are 0-based coordinates.
std::optional<CrystalElem> row_apply(int i, Dir dir, const RowElem& b) {
  int n = b.n();
  int r = umod(i, n);
  int from = umod(r - 1, n);  // letter i
  int to = r;                 // letter i+1
  if (dir == Dir::raise_op) std::swap(from, to);
  if (b.counts[from] == 0) return std::nullopt;
  RowElem out = b;
  --out.counts[from];
  ++out.counts[to];
  return CrystalElem(out);
}

std::optional<CrystalElem> col_apply(int i, Dir dir, const ColElem& b) {
  int n = b.n;
  int r = umod(i, n);
  int from = r == 0 ? n : r;          // letter i
  int to = r == 0 ? 1 : umod(r, n) + 1;  // letter i+1
  if (dir == Dir::raise_op) std::swap(from, to);
  if (!b.contains(from) || b.contains(to)) return std::nullopt;
  ColElem out = b;
  std::replace(out.letters.begin(), out.letters.end(), from, to);
  std::sort(out.letters.begin(), out.letters.end());
  return CrystalElem(out);
}

}  // namespace

std::optional<CrystalElem> apply(int i, Dir dir, const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b)) return row_apply(i, dir, *rb);
  return col_apply(i, dir, std::get<ColElem>(b));
}

int eps(int i, const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b))
    return rb->counts[umod(i, rb->n())];
  const ColElem& cb = std::get<ColElem>(b);
  int n = cb.n;
  int r = umod(i, n);
  int lo = r == 0 ? n : r;
  int hi = r == 0 ? 1 : r + 1;
  return (cb.contains(hi) && !cb.contains(lo)) ? 1 : 0;
}

int phi(int i, const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b))
    return rb->counts[umod(i - 1, rb->n())];
  const ColElem& cb = std::get<ColElem>(b);
  int n = cb.n;
  int r = umod(i, n);
  int lo = r == 0 ? n : r;
  int hi = r == 0 ? 1 : r + 1;
  return (cb.contains(lo) && !cb.contains(hi)) ? 1 : 0;
}

int elem_n(const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b)) return rb->n();
  return std::get<ColElem>(b).n;
}

int elem_level(const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b)) return rb->level();
  return 1;
}

ClWeight weight(const CrystalElem& b) {
  ClWeight w;
  if (const RowElem* rb = std::get_if<RowElem>(&b)) {
    w.content = rb->counts;
  } else {
    const ColElem& cb = std::get<ColElem>(b);
    w.content.assign(cb.n, 0);
    for (int v : cb.letters) w.content[v - 1] = 1;
  }
  return w;
}

CrystalElem rotate_labels(int s, const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b)) {
    int n = rb->n();
    RowElem out;
    out.counts.assign(n, 0);
    for (int t = 0; t < n; ++t) out.counts[umod(t + s, n)] = rb->counts[t];
    return out;
  }
  const ColElem& cb = std::get<ColElem>(b);
  ColElem out;
  out.n = cb.n;
  for (int v : cb.letters) out.letters.push_back(umod(v - 1 + s, cb.n) + 1);
  std::sort(out.letters.begin(), out.letters.end());
  return out;
}

std::string encode(const CrystalElem& b) {
  std::ostringstream out;
  if (const RowElem* rb = std::get_if<RowElem>(&b)) {
    for (int t = 0; t < rb->n(); ++t) {
      if (t) out << ',';
      out << rb->counts[t];
    }
  } else {
    const ColElem& cb = std::get<ColElem>(b);
    out << '{';
    for (std::size_t j = 0; j < cb.letters.size(); ++j) {
      if (j) out << '<';
      out << cb.letters[j];
    }
    out << '}';
  }
  return out.str();
}

Crystal::Crystal(int n, int k, int l) : n_(n), k_(k), l_(l) {
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  if (k < 1 || k > n - 1) throw std::invalid_argument("k must be in 1..n-1");
  if (l < 1) throw std::invalid_argument("l must be >= 1");
  if (k > 1 && l > 1)
    throw std::invalid_argument("only rows (k=1) and columns (l=1) supported");
}

namespace {

void gen_rows(int n, int rest, std::vector<int>& acc,
              std::vector<CrystalElem>& out) {
  if (static_cast<int>(acc.size()) == n - 1) {
    acc.push_back(rest);
    out.push_back(RowElem{acc});
    acc.pop_back();
    return;
  }
  for (int v = 0; v <= rest; ++v) {
    acc.push_back(v);
    gen_rows(n, rest - v, acc, out);
    acc.pop_back();
  }
}

void gen_cols(int n, int k, int from, std::vector<int>& acc,
              std::vector<CrystalElem>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.push_back(ColElem{n, acc});
    return;
  }
  for (int v = from; v <= n; ++v) {
    acc.push_back(v);
    gen_cols(n, k, v + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<CrystalElem> Crystal::elements() const {
  std::vector<CrystalElem> out;
  std::vector<int> acc;
  if (is_row())
    gen_rows(n_, l_, acc, out);
  else
    gen_cols(n_, k_, 1, acc, out);
  return out;
}

long long Crystal::size() const {
  long long r = 1;
  if (is_row()) {
    for (int j = 1; j < n_; ++j) r = r * (l_ + j) / j;  // C(l+n-1, n-1)
  } else {
    for (int j = 1; j <= k_; ++j) r = r * (n_ - k_ + j) / j;  // C(n, k)
  }
  return r;
}

CrystalElem Crystal::classical_highest() const {
  if (is_row()) {
    RowElem b;
    b.counts.assign(n_, 0);
    b.counts[0] = l_;
    return b;
  }
  ColElem b;
  b.n = n_;
  for (int v = 1; v <= k_; ++v) b.letters.push_back(v);
  return b;
}

CrystalElem Crystal::classical_lowest() const {
  if (is_row()) {
    RowElem b;
    b.counts.assign(n_, 0);
    b.counts[n_ - 1] = l_;
    return b;
  }
  ColElem b;
  b.n = n_;
  for (int v = n_ - k_ + 1; v <= n_; ++v) b.letters.push_back(v);
  return b;
}

bool Crystal::contains(const CrystalElem& b) const {
  if (const RowElem* rb = std::get_if<RowElem>(&b)) {
    if (!is_row() || rb->n() != n_ || rb->level() != l_) return false;
    for (int v : rb->counts)
      if (v < 0) return false;
    return true;
  }
  const ColElem& cb = std::get<ColElem>(b);
  if (is_row() || cb.n != n_ || cb.k() != k_) return false;
  for (std::size_t j = 0; j < cb.letters.size(); ++j) {
    if (cb.letters[j] < 1 || cb.letters[j] > n_) return false;
    if (j > 0 && cb.letters[j] <= cb.letters[j - 1]) return false;
  }
  return true;
}

CrystalElem Crystal::elem_with_phi(const std::vector<int>& lambda) const {
  if (static_cast<int>(lambda.size()) != n_)
    throw std::invalid_argument("weight must have n coefficients");
  std::optional<CrystalElem> found;
  for (const CrystalElem& b : elements()) {
    if (phi_weight(b) == lambda) {
      if (found)
        throw std::domain_error("several elements share this phi weight");
      found = b;
    }
  }
  if (!found)
    throw std::domain_error("no element with the requested phi weight");
  return *found;
}

std::vector<int> Crystal::eps_weight(const CrystalElem& b) const {
  std::vector<int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = eps(i, b);
  return w;
}

std::vector<int> Crystal::phi_weight(const CrystalElem& b) const {
  std::vector<int> w(n_);
  for (int i = 0; i < n_; ++i) w[i] = phi(i, b);
  return w;
}

std::string Crystal::str() const {
  std::ostringstream out;
  out << "B^{" << k_ << ',' << l_ << "}(n=" << n_ << ')';
  return out.str();
}

Crystal crystal_of(const CrystalElem& b) {
  if (const RowElem* rb = std::get_if<RowElem>(&b))
    return Crystal(rb->n(), 1, rb->level());
  const ColElem& cb = std::get<ColElem>(b);
  return Crystal(cb.n, cb.k(), 1);
}

}  // namespace pathcrystal
