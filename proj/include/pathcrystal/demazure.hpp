#ifndef PATHCRYSTAL_DEMAZURE_HPP
#define PATHCRYSTAL_DEMAZURE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pathcrystal/crystal.hpp"
#include "pathcrystal/partition.hpp"
#include "pathcrystal/path.hpp"
#include "pathcrystal/schur_expansion.hpp"
#include "pathcrystal/weyl.hpp"

namespace pathcrystal {

// Layered lowering scheme over one factor crystal B^{k,l}, with all operator
// indices rotated by a fixed amount.  Step K = (j-1)d + a (1 <= a <= d)
// lowers along the a-th-from-right letter of the j-th block word; the block
// for layer j starts at index (rotation - k(j-1)) mod n.
class DemazureSetup {
 public:
  DemazureSetup(int n, int k, int l, int rotation = 0);

  int n() const { return n_; }
  int k() const { return k_; }
  int l() const { return l_; }
  int rotation() const { return s_; }
  int d() const { return d_; }
  const Crystal& factor() const { return factor_; }

  std::pair<int, int> layer_of(int K) const;  // (j, a)
  int scheme_letter(int K) const;
  Word word(int K) const;  // leftmost first; the rightmost letter acts first

  // lambda_j = l Lambda_{(rotation - jk) mod n}, as Lambda coefficients.
  std::vector<int> head_coeffs(int j) const;

  // The frozen element at depth j >= 1: the unique b with phi(b) = lambda_{j-1}.
  CrystalElem ground_elem(int j) const;

  // u_{lambda_J} (x) bbar_J (x) ... (x) bbar_1.
  TruncatedPath ground_state_path(int J) const;

  int default_truncation(int K) const;  // ceil(K/d) + 1

  std::string str() const;
  nlohmann::json to_json() const;

 private:
  int n_, k_, l_, s_;
  Crystal factor_;
  int d_;
};

// The nested subsets of the factor crystal: layer j starts from {bbar_j} and
// closes under one lowering operator per step a = 1..d.
std::vector<CrystalElem> build_Bja(const DemazureSetup& setup, int j, int a);

struct ConditionReport {
  int layers = 0;
  bool perfect = false;        // necessary consequences only (see note)
  bool reaches_full = false;   // layer closure exhausts B after d steps
  bool head_bound = false;     // <lambda_j, h_i> <= eps_i on the prior subset
  bool increasing = false;     // scheme words grow by one reflection in length
  std::string note;
  std::vector<std::string> failures;

  bool all_pass() const {
    return perfect && reaches_full && head_bound && increasing;
  }
  nlohmann::json to_json() const;
};

ConditionReport check_conditions(const DemazureSetup& setup, int layers);

// Iterated lowering closure: seed {ground_state_path(truncation)}, then for
// each word letter, rightmost first, close under that lowering operator.
// truncation < 0 picks default_truncation(|word|).  Throws TruncationError
// when a lowering is directed at the frozen head.
std::vector<TruncatedPath> demazure_paths(const DemazureSetup& setup,
                                          const Word& word,
                                          int truncation = -1);

// The predicted set at step K: frozen factors above depth j, one factor from
// build_Bja(j, a), and j-1 free factors, as truncated paths.
std::vector<TruncatedPath> demazure_model(const DemazureSetup& setup, int K,
                                          int truncation = -1);

struct IsoReport {
  int K = 0, j = 0, a = 0, truncation = 0;
  std::size_t path_count = 0, model_count = 0;
  bool sets_equal = false;
  bool frozen_tail_ok = false;  // closure never alters factors above depth j
  bool edges_equal = false;     // edge set survives stripping the frozen part
  std::vector<std::string> mismatches;

  bool ok() const { return sets_equal && frozen_tail_ok && edges_equal; }
  nlohmann::json to_json() const;
};

// Closure-vs-model comparison at one step, with the edge check performed
// through the strip map that removes the frozen prefix.
IsoReport verify_iso(const DemazureSetup& setup, int K, int truncation = -1);

// Graded Schur expansion over the classical-highest paths of a model:
// coefficient of s_lambda gains q^{grade(p)} for each highest path of
// dominant content lambda.  Asserts the model is closed under raise_i, i != 0,
// and that every highest weight is a genuine partition.
SchurExpansion demazure_character(
    const std::vector<TruncatedPath>& model,
    const std::function<long long(const TruncatedPath&)>& grade);

// All paths u_{l Lambda_0} (x) (B^{1,l})^{(x) L} (rotation L mod n), graded by
// the tail-regularized energy relative to the ground state.
SchurExpansion homogeneous_character(int n, int l, int L);

// All paths u_{Lambda_0} (x) B^{mu_1,1} (x) ... (x) B^{mu_m,1}, graded by the
// pairwise energy relative to the ground state.
SchurExpansion inhomogeneous_character(int n, const Partition& mu);

// Building blocks shared with the verifiers and tests.
std::vector<TruncatedPath> full_row_model(int n, int l, int L);
std::vector<TruncatedPath> inhom_model(int n, const Partition& mu);
TruncatedPath inhom_ground(int n, const Partition& mu);

// Grading offset of the rectangular comparison: l*a*(L - (n/2)(a+1)) with
// a = floor(L/n).
long long E0(int n, int l, int L);

struct KostkaReport {
  int n = 0, l = 0, L = 0;
  long long offset = 0;  // E0(n, l, L)
  SchurExpansion lhs;    // q^offset * graded character
  SchurExpansion rhs;    // charge-statistic polynomials, one per partition
  bool equal = false;
  std::string diff;

  nlohmann::json to_json() const;
};

// Compares the energy-graded character of (B^{1,l})^{(x) L} against the
// charge-statistic polynomials for content (l^L), shifted by E0.
KostkaReport verify_kostka(int n, int l, int L);

struct InhomReport {
  int n = 0;
  Partition mu;
  std::string tableau;    // the row-packed tableau of content mu
  long long charge_value = 0;
  SchurExpansion lhs;
  SchurExpansion rhs;
  bool equal = false;
  std::string diff;

  nlohmann::json to_json() const;
};

// Compares the energy-graded character of the column-factor model against
// q^charge * sum over lambda of (charge polynomial of lambda', mu)(q^{-1}).
InhomReport verify_inhom(int n, const Partition& mu);

}  // namespace pathcrystal

#endif
