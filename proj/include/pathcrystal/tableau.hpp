#ifndef PATHCRYSTAL_TABLEAU_HPP
#define PATHCRYSTAL_TABLEAU_HPP

#include <string>
#include <vector>

#include "pathcrystal/partition.hpp"
#include "pathcrystal/qpoly.hpp"
#include "pathcrystal/schur_expansion.hpp"

namespace pathcrystal {

// Semistandard Young tableau: rows weakly increase, columns strictly increase.
class Tableau {
 public:
  Tableau(std::vector<std::vector<int>> rows);  // validates

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  std::vector<int> content() const;  // multiplicity of each letter 1..max

  // Rows from last to first, each left to right (the reverse reading word).
  std::vector<int> reading_word() const;

  std::string str() const;  // "[[1,1,2],[2,3]]"

 private:
  std::vector<std::vector<int>> rows_;
};

// All semistandard tableaux of the given shape and content (content[i] is the
// multiplicity of letter i+1).  Deterministic order: lexicographic on the
// top-to-bottom row-major reading.
std::vector<Tableau> enumerate_ssyt(const Partition& shape,
                                    const std::vector<int>& content);

long long kostka_number(const Partition& shape, const std::vector<int>& content);

// Charge of a word whose content is a partition.  Repeatedly extracts a
// standard subword: start at the rightmost 1, then for each next letter take
// the nearest occurrence to the left, wrapping around to the right end when
// none exists; the letter's index grows by 1 exactly on a wrap, and charge is
// the total of all indices over all extracted subwords.
int charge(const std::vector<int>& word);
int charge(const Tableau& t);

// Kostka-Foulkes polynomial: sum of q^charge over semistandard tableaux of
// shape `shape` and content `mu`.  pre: |shape| == |mu|.
QPoly kostka_foulkes(const Partition& shape, const Partition& mu);

// The tableau of shape (n, ..., n, r) with p full rows, |mu| = p*n + r and
// 0 <= r < n, filled row by row with mu_1 ones, mu_2 twos, and so on.  Its
// charge supplies the global q-shift of the inhomogeneous character.
// pre: |mu| >= 1 and the filling is semistandard (holds whenever mu_1 < n).
Tableau row_packed_tableau(const Partition& mu, int n);

// Graded multiplicity generating function sum_lambda K_{lambda,mu}(q) s_lambda
// restricted to l(lambda) <= n.
SchurExpansion milne(const Partition& mu, int n);

// Number of semistandard tableaux of shape `shape` with entries at most n.
long long schur_dim(const Partition& shape, int n);

}  // namespace pathcrystal

#endif
