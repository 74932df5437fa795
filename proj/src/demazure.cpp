#include "pathcrystal/demazure.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pathcrystal/closure.hpp"
#include "pathcrystal/energy.hpp"
#include "pathcrystal/tableau.hpp"

namespace pathcrystal {

namespace {

int umod(int a, int m) { return ((a % m) + m) % m; }

void check_setup_args(int n, int k, int l) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  if (k < 1 || k >= n)
    throw std::invalid_argument("column height must lie in 1..n-1");
  if (l < 1) throw std::invalid_argument("row width must be at least 1");
  if (k > 1 && l > 1)
    throw std::invalid_argument(
        "factor crystal must be a single row or a single column");
}

std::optional<TruncatedPath> path_op(int i, Dir dir, const TruncatedPath& p) {
  return tensor_apply(i, dir, p);
}

std::optional<CrystalElem> elem_op(int i, Dir dir, const CrystalElem& b) {
  return apply(i, dir, b);
}

}  // namespace

DemazureSetup::DemazureSetup(int n, int k, int l, int rotation)
    : n_((check_setup_args(n, k, l), n)), k_(k), l_(l), s_(umod(rotation, n)),
      factor_(n, k, l), d_(k * (n - k)) {}

std::pair<int, int> DemazureSetup::layer_of(int K) const {
  if (K < 1) throw std::invalid_argument("layer_of: step must be >= 1");
  const int j = (K - 1) / d_ + 1;
  return {j, K - (j - 1) * d_};
}

int DemazureSetup::scheme_letter(int K) const {
  auto [j, a] = layer_of(K);
  Word block = block_word(k_, umod(s_ - k_ * (j - 1), n_), n_);
  return block[block.size() - static_cast<std::size_t>(a)];
}

Word DemazureSetup::word(int K) const {
  Word out;
  out.reserve(static_cast<std::size_t>(std::max(K, 0)));
  for (int t = K; t >= 1; --t) out.push_back(scheme_letter(t));
  return out;
}

std::vector<int> DemazureSetup::head_coeffs(int j) const {
  std::vector<int> v(static_cast<std::size_t>(n_), 0);
  v[static_cast<std::size_t>(umod(s_ - j * k_, n_))] = l_;
  return v;
}

CrystalElem DemazureSetup::ground_elem(int j) const {
  if (j < 1) throw std::invalid_argument("ground_elem: depth must be >= 1");
  return factor_.elem_with_phi(head_coeffs(j - 1));
}

TruncatedPath DemazureSetup::ground_state_path(int J) const {
  if (J < 0) throw std::invalid_argument("ground_state_path: negative length");
  TruncatedPath p;
  p.head = head_coeffs(J);
  p.body.reserve(static_cast<std::size_t>(J));
  for (int t = 0; t < J; ++t) p.body.push_back(ground_elem(J - t));
  return p;
}

int DemazureSetup::default_truncation(int K) const {
  if (K <= 0) return 1;
  return (K + d_ - 1) / d_ + 1;
}

std::string DemazureSetup::str() const {
  std::ostringstream os;
  os << factor_.str() << " rotation " << s_ << " d=" << d_;
  return os.str();
}

nlohmann::json DemazureSetup::to_json() const {
  return {{"n", n_}, {"k", k_}, {"l", l_}, {"rotation", s_}, {"d", d_}};
}

std::vector<CrystalElem> build_Bja(const DemazureSetup& setup, int j, int a) {
  if (a < 0 || a > setup.d())
    throw std::invalid_argument("build_Bja: step index out of range");
  std::vector<CrystalElem> cur{setup.ground_elem(j)};
  const auto opt = closure_defaults();
  for (int t = 1; t <= a; ++t) {
    const int i = setup.scheme_letter((j - 1) * setup.d() + t);
    cur = close_under(cur, {{i, Dir::lower_op}}, elem_op, opt).nodes;
  }
  return cur;
}

nlohmann::json ConditionReport::to_json() const {
  return {{"layers", layers},
          {"perfect", perfect},
          {"reaches_full", reaches_full},
          {"head_bound", head_bound},
          {"increasing", increasing},
          {"note", note},
          {"failures", failures}};
}

ConditionReport check_conditions(const DemazureSetup& setup, int layers) {
  ConditionReport rep;
  rep.layers = layers;
  rep.note =
      "level bound and phi/eps fiber uniqueness at the minimal level "
      "(necessary consequences only)";
  const Crystal& B = setup.factor();
  const int n = setup.n();
  const int lev = setup.k() == 1 ? setup.l() : 1;

  rep.perfect = true;
  std::map<std::vector<int>, int> phi_fibers, eps_fibers;
  for (const CrystalElem& b : B.elements()) {
    auto ev = B.eps_weight(b);
    auto pv = B.phi_weight(b);
    int esum = 0, psum = 0;
    for (int x : ev) esum += x;
    for (int x : pv) psum += x;
    if (esum < lev || psum < lev) {
      rep.perfect = false;
      rep.failures.push_back("level bound fails at " + encode(b));
    }
    if (esum == lev) ++eps_fibers[ev];
    if (psum == lev) ++phi_fibers[pv];
  }
  long long weight_count = 1;  // C(lev + n - 1, n - 1)
  for (int t = 1; t <= n - 1; ++t)
    weight_count = weight_count * (lev + t) / t;
  for (const auto* fibers : {&phi_fibers, &eps_fibers}) {
    if (static_cast<long long>(fibers->size()) != weight_count) {
      rep.perfect = false;
      rep.failures.push_back("minimal fibers miss some level-" +
                             std::to_string(lev) + " weight");
    }
    for (const auto& [w, count] : *fibers)
      if (count != 1) {
        rep.perfect = false;
        rep.failures.push_back("minimal fiber not a singleton");
      }
  }

  rep.reaches_full = true;
  rep.head_bound = true;
  for (int j = 1; j <= layers; ++j) {
    if (static_cast<long long>(build_Bja(setup, j, setup.d()).size()) !=
        B.size()) {
      rep.reaches_full = false;
      rep.failures.push_back("layer " + std::to_string(j) +
                             " does not exhaust the factor crystal");
    }
    const auto head = setup.head_coeffs(j);
    for (int a = 1; a <= setup.d(); ++a) {
      const int i = setup.scheme_letter((j - 1) * setup.d() + a);
      const int bound = head[static_cast<std::size_t>(i)];
      if (bound == 0) continue;
      for (const CrystalElem& b : build_Bja(setup, j, a - 1))
        if (eps(i, b) < bound) {
          rep.head_bound = false;
          rep.failures.push_back("head pairing exceeds eps_" +
                                 std::to_string(i) + " at " + encode(b));
        }
    }
  }

  std::vector<Word> words;
  for (int K = 0; K <= layers * setup.d(); ++K) words.push_back(setup.word(K));
  rep.increasing = is_increasing_chain(words, n);
  if (!rep.increasing) rep.failures.push_back("length chain stalls");
  return rep;
}

std::vector<TruncatedPath> demazure_paths(const DemazureSetup& setup,
                                          const Word& word, int truncation) {
  const int J = truncation < 0
                    ? setup.default_truncation(static_cast<int>(word.size()))
                    : truncation;
  std::vector<TruncatedPath> cur{setup.ground_state_path(J)};
  const auto opt = closure_defaults();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = close_under(cur, {{*it, Dir::lower_op}}, path_op, opt).nodes;
  return cur;
}

std::vector<TruncatedPath> demazure_model(const DemazureSetup& setup, int K,
                                          int truncation) {
  auto [j, a] = setup.layer_of(K);
  const int J = truncation < 0 ? setup.default_truncation(K) : truncation;
  if (J < j)
    throw std::invalid_argument("demazure_model: truncation above the active depth");

  TruncatedPath base;
  base.head = setup.head_coeffs(J);
  for (int t = 0; t < J - j; ++t) base.body.push_back(setup.ground_elem(J - t));

  const auto active = build_Bja(setup, j, a);
  const auto free_elems = setup.factor().elements();
  const int free_slots = j - 1;

  std::vector<TruncatedPath> out;
  std::vector<std::size_t> odo(static_cast<std::size_t>(free_slots), 0);
  for (const CrystalElem& x : active) {
    std::fill(odo.begin(), odo.end(), 0);
    while (true) {
      TruncatedPath p = base;
      p.body.push_back(x);
      for (std::size_t t = 0; t < odo.size(); ++t)
        p.body.push_back(free_elems[odo[t]]);
      out.push_back(std::move(p));
      std::size_t pos = odo.size();
      bool done = odo.empty();
      while (pos > 0) {
        --pos;
        if (++odo[pos] < free_elems.size()) break;
        odo[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::json IsoReport::to_json() const {
  return {{"K", K},
          {"j", j},
          {"a", a},
          {"truncation", truncation},
          {"path_count", path_count},
          {"model_count", model_count},
          {"sets_equal", sets_equal},
          {"frozen_tail_ok", frozen_tail_ok},
          {"edges_equal", edges_equal},
          {"ok", ok()},
          {"mismatches", mismatches}};
}

IsoReport verify_iso(const DemazureSetup& setup, int K, int truncation) {
  IsoReport rep;
  rep.K = K;
  std::tie(rep.j, rep.a) = setup.layer_of(K);
  rep.truncation =
      truncation < 0 ? setup.default_truncation(K) : truncation;
  const int J = rep.truncation;
  const int j = rep.j;

  auto lhs = demazure_paths(setup, setup.word(K), J);
  auto rhs = demazure_model(setup, K, J);
  rep.path_count = lhs.size();
  rep.model_count = rhs.size();
  rep.sets_equal = lhs == rhs;
  if (!rep.sets_equal) {
    std::vector<TruncatedPath> only;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::back_inserter(only));
    for (std::size_t t = 0; t < only.size() && t < 3; ++t)
      rep.mismatches.push_back("closure only: " + encode(only[t]));
    only.clear();
    std::set_difference(rhs.begin(), rhs.end(), lhs.begin(), lhs.end(),
                        std::back_inserter(only));
    for (std::size_t t = 0; t < only.size() && t < 3; ++t)
      rep.mismatches.push_back("model only: " + encode(only[t]));
  }

  rep.frozen_tail_ok = true;
  std::vector<CrystalElem> frozen;
  for (int t = 0; t < J - j; ++t) frozen.push_back(setup.ground_elem(J - t));
  for (const TruncatedPath& p : lhs)
    for (std::size_t t = 0; t < frozen.size(); ++t)
      if (!(p.body[t] == frozen[t])) {
        rep.frozen_tail_ok = false;
        rep.mismatches.push_back("thawed frozen factor in " + encode(p));
        break;
      }

  const auto strip = [&](const TruncatedPath& p) {
    TruncatedPath q;
    q.head = setup.head_coeffs(j);
    q.body.assign(p.body.begin() + (J - j), p.body.end());
    return encode(q);
  };
  auto lhs_graph =
      export_graph(induced_graph(lhs, setup.n(), tensor_apply_clamped), strip);
  auto model_graph =
      export_graph(induced_graph(demazure_model(setup, K, j), setup.n(),
                                 tensor_apply_clamped),
                   [](const TruncatedPath& p) { return encode(p); });
  rep.edges_equal = lhs_graph == model_graph;
  if (!rep.edges_equal)
    rep.mismatches.push_back(
        "stripped edge sets differ: " + std::to_string(lhs_graph.edges.size()) +
        " vs " + std::to_string(model_graph.edges.size()));
  return rep;
}

SchurExpansion demazure_character(
    const std::vector<TruncatedPath>& model,
    const std::function<long long(const TruncatedPath&)>& grade) {
  SchurExpansion out;
  if (model.empty()) return out;
  std::vector<TruncatedPath> sorted_model = model;
  std::sort(sorted_model.begin(), sorted_model.end());
  sorted_model.erase(std::unique(sorted_model.begin(), sorted_model.end()),
                     sorted_model.end());
  const int n = sorted_model.front().n();

  for (const TruncatedPath& p : sorted_model) {
    bool highest = true;
    for (int i = 1; i < n; ++i) {
      auto up = tensor_apply(i, Dir::raise_op, p);
      if (up && !std::binary_search(sorted_model.begin(), sorted_model.end(), *up))
        throw std::logic_error(
            "demazure_character: model is not closed under raising");
      if (up) highest = false;
    }
    if (!highest) continue;
    const ClWeight w = weight(p);
    for (int t = 0; t + 1 < w.n(); ++t)
      if (w.content[t] < w.content[t + 1])
        throw std::logic_error(
            "demazure_character: non-dominant highest weight " + w.str());
    out.add(Partition(w.content), QPoly::q_power(static_cast<int>(grade(p))));
  }
  return out;
}

std::vector<TruncatedPath> full_row_model(int n, int l, int L) {
  DemazureSetup setup(n, 1, l, L);
  TruncatedPath base;
  base.head = setup.head_coeffs(L);
  const auto elems = setup.factor().elements();
  std::vector<TruncatedPath> out;
  std::vector<std::size_t> odo(static_cast<std::size_t>(L), 0);
  while (true) {
    TruncatedPath p = base;
    for (std::size_t t = 0; t < odo.size(); ++t)
      p.body.push_back(elems[odo[t]]);
    out.push_back(std::move(p));
    std::size_t pos = odo.size();
    bool done = odo.empty();
    while (pos > 0) {
      --pos;
      if (++odo[pos] < elems.size()) break;
      odo[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SchurExpansion homogeneous_character(int n, int l, int L) {
  DemazureSetup setup(n, 1, l, L);
  if (setup.head_coeffs(L)[0] != l)
    throw std::logic_error("homogeneous_character: rotation misaligned");
  const auto model = full_row_model(n, l, L);
  const auto ground = setup.ground_state_path(L);
  const CrystalElem beyond = setup.ground_elem(L + 1);
  const Crystal& B = setup.factor();
  const RMap r = combinatorial_R(B, B);
  const EnergyTable table = energy_table(B, B, r);
  return demazure_character(model, [&](const TruncatedPath& p) {
    return homogeneous_energy(p, ground, beyond, table);
  });
}

TruncatedPath inhom_ground(int n, const Partition& mu) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  TruncatedPath g;
  g.head.assign(static_cast<std::size_t>(n), 0);
  g.head[0] = 1;
  int c = 0;
  for (int part : mu.parts()) {
    c += part;
    Crystal F(n, part, 1);
    std::vector<int> phi_target(static_cast<std::size_t>(n), 0);
    phi_target[static_cast<std::size_t>(umod(c, n))] = 1;
    g.body.push_back(F.elem_with_phi(phi_target));
  }
  return g;
}

std::vector<TruncatedPath> inhom_model(int n, const Partition& mu) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<std::vector<CrystalElem>> pools;
  for (int part : mu.parts()) pools.push_back(Crystal(n, part, 1).elements());
  TruncatedPath base;
  base.head.assign(static_cast<std::size_t>(n), 0);
  base.head[0] = 1;

  std::vector<TruncatedPath> out;
  std::vector<std::size_t> odo(pools.size(), 0);
  while (true) {
    TruncatedPath p = base;
    for (std::size_t t = 0; t < pools.size(); ++t)
      p.body.push_back(pools[t][odo[t]]);
    out.push_back(std::move(p));
    std::size_t pos = odo.size();
    bool done = odo.empty();
    while (pos > 0) {
      --pos;
      if (++odo[pos] < pools[pos].size()) break;
      odo[pos] = 0;
      if (pos == 0) done = true;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SchurExpansion inhomogeneous_character(int n, const Partition& mu) {
  const auto model = inhom_model(n, mu);
  const auto ground = inhom_ground(n, mu);
  TableCache cache;
  const long long ground_energy = inhomogeneous_energy(ground.body, cache);
  return demazure_character(model, [&](const TruncatedPath& p) {
    return inhomogeneous_energy(p.body, cache) - ground_energy;
  });
}

long long E0(int n, int l, int L) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  const long long a = L / n;
  return static_cast<long long>(l) * a * L -
         static_cast<long long>(l) * n * (a * (a + 1) / 2);
}

nlohmann::json KostkaReport::to_json() const {
  return {{"setup", {{"n", n}, {"l", l}, {"L", L}}},
          {"offset", offset},
          {"lhs_expansion", lhs.to_json()},
          {"rhs_expansion", rhs.to_json()},
          {"equal", equal},
          {"diff", diff}};
}

KostkaReport verify_kostka(int n, int l, int L) {
  KostkaReport rep;
  rep.n = n;
  rep.l = l;
  rep.L = L;
  rep.offset = E0(n, l, L);
  rep.lhs = homogeneous_character(n, l, L).scaled(static_cast<int>(rep.offset));
  const Partition rect(std::vector<int>(static_cast<std::size_t>(L), l));
  for (const Partition& lam : partitions_of(l * L, n))
    rep.rhs.add(lam, kostka_foulkes(lam, rect));
  rep.equal = rep.lhs == rep.rhs;
  rep.diff = rep.lhs.diff(rep.rhs);
  return rep;
}

nlohmann::json InhomReport::to_json() const {
  return {{"setup", {{"n", n}, {"mu", mu.str()}}},
          {"tableau", tableau},
          {"charge", charge_value},
          {"lhs_expansion", lhs.to_json()},
          {"rhs_expansion", rhs.to_json()},
          {"equal", equal},
          {"diff", diff}};
}

InhomReport verify_inhom(int n, const Partition& mu) {
  InhomReport rep;
  rep.n = n;
  rep.mu = mu;
  const Tableau t = row_packed_tableau(mu, n);
  rep.tableau = t.str();
  rep.charge_value = charge(t);
  rep.lhs = inhomogeneous_character(n, mu);
  for (const Partition& lam : partitions_of(mu.size(), n))
    rep.rhs.add(lam, kostka_foulkes(lam.conjugate(), mu)
                         .inverted_q()
                         .shifted(static_cast<int>(rep.charge_value)));
  rep.equal = rep.lhs == rep.rhs;
  rep.diff = rep.lhs.diff(rep.rhs);
  return rep;
}

}  // namespace pathcrystal
