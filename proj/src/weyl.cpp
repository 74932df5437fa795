#include "pathcrystal/weyl.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathcrystal {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int umod(long long a, int n) {
  long long r = a % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

}  // namespace

AffinePerm::AffinePerm(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  window_.resize(n);
  std::iota(window_.begin(), window_.end(), 1);
}

AffinePerm::AffinePerm(int n, std::vector<long long> window)
    : n_(n), window_(std::move(window)) {
  if (n < 2) throw std::invalid_argument("rank must be >= 2");
  if (static_cast<int>(window_.size()) != n)
    throw std::invalid_argument("window size must equal rank");
  long long sum = 0;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    sum += window_[i] - (i + 1);
    int r = umod(window_[i] - 1, n);
    if (seen[r]) throw std::invalid_argument("window residues must be distinct");
    seen[r] = true;
  }
  if (sum != 0) throw std::invalid_argument("window sum condition violated");
}

long long AffinePerm::operator()(long long x) const {
  int c = umod(x - 1, n_);  // x = (c+1) + t*n
  long long t = floordiv(x - (c + 1), n_);
  return window_[c] + t * n_;
}

AffinePerm AffinePerm::left_mult(int i) const {
  int r = umod(i, n_);
  std::vector<long long> w = window_;
  for (auto& v : w) {
    int res = umod(v - r, n_);  // v mod n relative to i
    if (res == 0)
      v += 1;
    else if (res == 1)
      v -= 1;
  }
  return AffinePerm(n_, std::move(w));
}

AffinePerm AffinePerm::compose(const AffinePerm& f, const AffinePerm& g) {
  if (f.n() != g.n()) throw std::invalid_argument("rank mismatch");
  std::vector<long long> w(f.n());
  for (int j = 1; j <= f.n(); ++j) w[j - 1] = f(g(j));
  return AffinePerm(f.n(), std::move(w));
}

long long AffinePerm::length() const {
  long long total = 0;
  for (int i = 1; i <= n_; ++i)
    for (int c = 1; c <= n_; ++c) {
      long long t0 = floordiv(i - c, n_) + 1;
      long long t1 = floordiv(window_[i - 1] - window_[c - 1] - 1, n_);
      if (t1 >= t0) total += t1 - t0 + 1;
    }
  return total;
}

std::string AffinePerm::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < n_; ++i) {
    if (i) out << ',';
    out << window_[i];
  }
  out << ']';
  return out.str();
}

AffinePerm from_word(const Word& w, int n) {
  AffinePerm p(n);
  for (auto it = w.rbegin(); it != w.rend(); ++it) p = p.left_mult(*it);
  return p;
}

std::string word_str(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

Word parse_word(const std::string& s, int n) {
  Word w;
  std::istringstream in(s);
  int v;
  while (in >> v) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("word letter out of range");
    w.push_back(v);
  }
  if (!in.eof()) throw std::invalid_argument("word must be space-separated indices");
  return w;
}

Word block_word(int k, int i, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range");
  Word w;
  for (int t = k - 1; t >= 0; --t)
    for (int a = n - k - 1; a >= 0; --a) w.push_back(umod(i + a - t, n));
  return w;
}

Word block_word_alt(int k, int i, int n) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("k out of range");
  Word w;
  for (int u = n - k - 1; u >= 0; --u)
    for (int a = k - 1; a >= 0; --a) w.push_back(umod(i - a + u, n));
  return w;
}

Word word_from_scheme(int n, int d, int k_steps,
                      const std::function<int(int, int)>& scheme) {
  if (k_steps < 0) throw std::invalid_argument("negative step count");
  Word w;
  for (int step = 1; step <= k_steps; ++step) {
    int j = (step - 1) / d + 1;
    int a = (step - 1) % d + 1;
    w.insert(w.begin(), umod(scheme(j, a), n));
  }
  return w;
}

Word word_wmu(const Partition& mu, int n) {
  if (mu.length() > 0 && mu.parts()[0] > n - 1)
    throw std::invalid_argument("parts must be at most n-1");
  Word w;
  int c = 0;
  for (int p : mu.parts()) {
    c += p;
    Word blk = block_word(p, c, n);
    w.insert(w.end(), blk.begin(), blk.end());
  }
  return w;
}

bool is_increasing_chain(const std::vector<Word>& words, int n) {
  for (std::size_t t = 1; t < words.size(); ++t) {
    const Word& prev = words[t - 1];
    const Word& cur = words[t];
    if (cur.size() != prev.size() + 1 ||
        !std::equal(prev.begin(), prev.end(), cur.begin() + 1))
      throw std::invalid_argument("chain words must grow by one left letter");
  }
  for (std::size_t t = 1; t < words.size(); ++t) {
    long long a = from_word(words[t - 1], n).length();
    long long b = from_word(words[t], n).length();
    if (b != a + 1) return false;
  }
  return true;
}

}  // namespace pathcrystal
