#ifndef PATHCRYSTAL_WEYL_HPP
#define PATHCRYSTAL_WEYL_HPP

#include <functional>
#include <string>
#include <vector>

#include "pathcrystal/partition.hpp"

namespace pathcrystal {

// A word in the simple reflections r_0..r_{n-1}, stored leftmost letter
// first; the rightmost letter acts first.
using Word = std::vector<int>;

// Affine permutation f: Z -> Z with f(x+n) = f(x)+n, represented by the
// window [f(1),...,f(n)].  The residues f(i) mod n are a permutation of
// {1..n} and sum(f(i)-i) = 0.
class AffinePerm {
 public:
  explicit AffinePerm(int n);  // identity
  AffinePerm(int n, std::vector<long long> window);

  int n() const { return n_; }
  const std::vector<long long>& window() const { return window_; }

  long long operator()(long long x) const;

  // r_i * this: the reflection acts on values, swapping i and i+1 in every
  // period.
  AffinePerm left_mult(int i) const;

  static AffinePerm compose(const AffinePerm& f, const AffinePerm& g);

  // Inversion count #{(a,b): 1 <= a <= n, a < b, f(a) > f(b)}.
  long long length() const;

  bool operator==(const AffinePerm&) const = default;
  std::string str() const;  // "[0,3]"

 private:
  int n_;
  std::vector<long long> window_;
};

AffinePerm from_word(const Word& w, int n);

std::string word_str(const Word& w);          // "0 1 0"
Word parse_word(const std::string& s, int n);  // space-separated indices

// The step word with k blocks of n-k letters; block t (t = k-1 down to 0,
// leftmost first) reads r_{i+(n-k-1)-t} ... r_{i+1-t} r_{i-t}.
// pre: 1 <= k <= n-1.
Word block_word(int k, int i, int n);

// Equivalent expression with n-k blocks of k ascending letters; same affine
// permutation as block_word.
Word block_word_alt(int k, int i, int n);

// Word of k_steps letters built by the recursion w <- r_{scheme(j,a)} w where
// step number (j-1)*d + a, 1 <= a <= d, appends scheme(j,a) on the left.
Word word_from_scheme(int n, int d, int k_steps,
                      const std::function<int(int, int)>& scheme);

// Concatenation block_word(mu_1, c_1, n) ... block_word(mu_m, c_m, n) with
// c_j = mu_1 + ... + mu_j.  pre: mu_1 <= n-1.
Word word_wmu(const Partition& mu, int n);

// True iff each word extends the previous by one letter on the left and the
// length of the affine permutation grows by exactly 1 at every step.
// Throws on a malformed chain.
bool is_increasing_chain(const std::vector<Word>& words, int n);

}  // namespace pathcrystal

#endif
