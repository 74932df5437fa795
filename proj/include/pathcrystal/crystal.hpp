#ifndef PATHCRYSTAL_CRYSTAL_HPP
#define PATHCRYSTAL_CRYSTAL_HPP

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pathcrystal/weight.hpp"

namespace pathcrystal {

enum class Dir { raise_op, lower_op };

// Element of the row crystal B^{1,l}: counts[t] copies of letter t+1, summing
// to the level l.
struct RowElem {
  std::vector<int> counts;

  int n() const { return static_cast<int>(counts.size()); }
  int level() const;

  auto operator<=>(const RowElem&) const = default;
};

// Element of the column crystal B^{k,1}: a strictly increasing k-subset of
// {1..n}.
struct ColElem {
  int n = 0;
  std::vector<int> letters;

  int k() const { return static_cast<int>(letters.size()); }
  bool contains(int letter) const;

  auto operator<=>(const ColElem&) const = default;
};

using CrystalElem = std::variant<RowElem, ColElem>;

// Kashiwara operator on a single element; nullopt when the operator kills it.
// Rows: lower_i moves one letter i to i+1 (cyclically n to 1 for i=0).
// Columns: lower_i replaces letter i by i+1 when i is present and i+1 absent
// (cyclically for i=0).
std::optional<CrystalElem> apply(int i, Dir dir, const CrystalElem& b);

int eps(int i, const CrystalElem& b);
int phi(int i, const CrystalElem& b);

int elem_n(const CrystalElem& b);
int elem_level(const CrystalElem& b);

ClWeight weight(const CrystalElem& b);

// Dynkin rotation: letters and operator indices shift by s mod n, so that
// rotate(s, apply(i, d, b)) = apply(i+s, d, rotate(s, b)).
CrystalElem rotate_labels(int s, const CrystalElem& b);

std::string encode(const CrystalElem& b);  // "0,0,2" / "{1<3}"

// One crystal B^{k,l} with k = 1 (row) or l = 1 (column).
class Crystal {
 public:
  Crystal(int n, int k, int l);

  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }
  bool is_row() const { return k_ == 1; }

  // Deterministic enumeration: rows in lexicographic count-vector order,
  // columns in lexicographic subset order.
  std::vector<CrystalElem> elements() const;
  long long size() const;

  CrystalElem classical_highest() const;  // (l,0,...,0) resp. {1..k}
  CrystalElem classical_lowest() const;   // (0,...,0,l) resp. {n-k+1..n}
  bool contains(const CrystalElem& b) const;

  // The unique element with phi(b) = lambda, lambda given by its coefficients
  // on Lambda_0..Lambda_{n-1}.  Found by search; throws if none or several
  // match (a level/perfectness violation).
  CrystalElem elem_with_phi(const std::vector<int>& lambda) const;

  // Coefficient vectors of eps(b) resp. phi(b) on Lambda_0..Lambda_{n-1}.
  std::vector<int> eps_weight(const CrystalElem& b) const;
  std::vector<int> phi_weight(const CrystalElem& b) const;

  auto operator<=>(const Crystal&) const = default;
  std::string str() const;  // "B^{k,l}(n)"

 private:
  int n_, k_, l_;
};

// The crystal an element belongs to (rows: B^{1,level}; columns: B^{k,1}).
Crystal crystal_of(const CrystalElem& b);

}  // namespace pathcrystal

#endif
