#include "pathcrystal/cli.hpp"

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pathcrystal/closure.hpp"
#include "pathcrystal/demazure.hpp"
#include "pathcrystal/tableau.hpp"
#include "pathcrystal/weyl.hpp"

namespace pathcrystal {

namespace {

int umod(int a, int m) { return ((a % m) + m) % m; }

// Sets CRYSTAL_CAP for the duration of one dispatch and restores the prior
// value afterwards, so embedding callers are not left with a stale budget.
class ScopedCap {
 public:
  explicit ScopedCap(long long cap) {
    if (cap <= 0) return;
    if (const char* prev = std::getenv("CRYSTAL_CAP")) previous_ = prev;
    active_ = true;
    setenv("CRYSTAL_CAP", std::to_string(cap).c_str(), 1);
  }
  ~ScopedCap() {
    if (!active_) return;
    if (previous_)
      setenv("CRYSTAL_CAP", previous_->c_str(), 1);
    else
      unsetenv("CRYSTAL_CAP");
  }
  ScopedCap(const ScopedCap&) = delete;
  ScopedCap& operator=(const ScopedCap&) = delete;

 private:
  bool active_ = false;
  std::optional<std::string> previous_;
};

std::pair<int, int> parse_step_range(const std::string& s) {
  try {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse step range '" + s +
                                "' (expected N or N..M)");
  }
}

struct GraphArgs {
  int n = 0, k = 1, l = 1, truncate = -1;
  std::string word, format = "dot";
};

int run_graph(const GraphArgs& a, std::ostream& out) {
  const Word word = parse_word(a.word, a.n);
  const int rotation = word.empty() ? 0 : word.back();
  DemazureSetup setup(a.n, a.k, a.l, rotation);
  auto paths = demazure_paths(setup, word, a.truncate);
  auto graph = export_graph(
      induced_graph(std::move(paths), a.n, tensor_apply_clamped),
      [](const TruncatedPath& p) { return encode(p); });
  if (a.format == "dot") {
    out << graph.to_dot();
  } else if (a.format == "json") {
    out << graph.to_json().dump(2) << "\n";
  } else if (a.format == "text") {
    for (const auto& node : graph.nodes) out << node << "\n";
    for (const auto& [f, i, t] : graph.edges)
      out << f << " -" << i << "-> " << t << "\n";
  } else {
    throw std::invalid_argument("unknown format '" + a.format + "'");
  }
  return 0;
}

struct CharacterArgs {
  int n = 0, k = 1, l = 1, L = 0;
  std::string mu, format = "json";
};

int run_character(const CharacterArgs& a, std::ostream& out) {
  SchurExpansion expansion;
  if (!a.mu.empty()) {
    expansion = inhomogeneous_character(a.n, Partition::parse(a.mu));
  } else if (a.L < 1) {
    throw std::invalid_argument("character needs --L (or --mu)");
  } else if (a.k == 1) {
    expansion = homogeneous_character(a.n, a.l, a.L);
  } else if (a.l == 1) {
    expansion = inhomogeneous_character(
        a.n,
        Partition(std::vector<int>(static_cast<std::size_t>(a.L), a.k)));
  } else {
    throw std::invalid_argument("k >= 2 together with l >= 2 is unsupported");
  }
  if (a.format == "json")
    out << expansion.to_json().dump() << "\n";
  else if (a.format == "text")
    out << expansion.str() << "\n";
  else
    throw std::invalid_argument("unknown format '" + a.format + "'");
  return 0;
}

struct KostkaArgs {
  std::string lambda, mu, format = "json";
};

int run_kostka(const KostkaArgs& a, std::ostream& out) {
  const QPoly poly =
      kostka_foulkes(Partition::parse(a.lambda), Partition::parse(a.mu));
  if (a.format == "json")
    out << poly.to_json().dump() << "\n";
  else if (a.format == "text")
    out << poly.str() << "\n";
  else
    throw std::invalid_argument("unknown format '" + a.format + "'");
  return 0;
}

struct VerifyIsoArgs {
  int n = 0, k = 1, l = 1, L = 0, truncate = -1;
  std::string K;
};

int run_verify_iso(const VerifyIsoArgs& a, std::ostream& out) {
  DemazureSetup setup(a.n, a.k, a.l);
  int lo = 1, hi = 0;
  if (!a.K.empty())
    std::tie(lo, hi) = parse_step_range(a.K);
  else if (a.L >= 1)
    hi = a.L * setup.d();
  else
    throw std::invalid_argument("verify iso needs --K or --L");
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("empty step range");

  nlohmann::json steps = nlohmann::json::array();
  bool all_ok = true;
  std::string diff;
  for (int K = lo; K <= hi; ++K) {
    IsoReport rep = verify_iso(setup, K, a.truncate);
    all_ok = all_ok && rep.ok();
    if (!rep.ok() && diff.empty())
      diff = "first failure at step " + std::to_string(K);
    steps.push_back(rep.to_json());
  }
  const int layers = (hi + setup.d() - 1) / setup.d();
  nlohmann::json report = {
      {"setup", setup.to_json()},
      {"condition_report", check_conditions(setup, layers).to_json()},
      {"steps", steps},
      {"equal", all_ok},
      {"diff", diff}};
  out << report.dump(2) << "\n";
  return all_ok ? 0 : 1;
}

struct VerifyKostkaArgs {
  int n = 0, l = 1, L = 0;
};

int run_verify_kostka(const VerifyKostkaArgs& a, std::ostream& out) {
  if (a.L < 1) throw std::invalid_argument("verify kostka needs --L >= 1");
  KostkaReport rep = verify_kostka(a.n, a.l, a.L);
  nlohmann::json report = rep.to_json();
  report["condition_report"] =
      check_conditions(DemazureSetup(a.n, 1, a.l, a.L), a.L).to_json();
  out << report.dump(2) << "\n";
  return rep.equal ? 0 : 1;
}

struct VerifyInhomArgs {
  int n = 0;
  std::string mu;
};

int run_verify_inhom(const VerifyInhomArgs& a, std::ostream& out) {
  if (a.mu.empty()) throw std::invalid_argument("verify inhom needs --mu");
  InhomReport rep = verify_inhom(a.n, Partition::parse(a.mu));
  nlohmann::json report = rep.to_json();
  report["condition_report"] = nullptr;
  out << report.dump(2) << "\n";
  return rep.equal ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Path realization of Demazure crystals for affine sl_n"};
  app.require_subcommand(1);

  GraphArgs ga;
  auto* graph = app.add_subcommand(
      "graph", "Edge-colored graph of an iterated lowering closure");
  graph->add_option("--n", ga.n, "rank (letters 1..n)")->required();
  graph->add_option("--k", ga.k, "column height of the factor crystal");
  graph->add_option("--l", ga.l, "row width of the factor crystal");
  graph->add_option("--word", ga.word,
                    "space-separated operator indices, rightmost acts first");
  graph->add_option("--format", ga.format, "dot | json | text");
  graph->add_option("--truncate", ga.truncate, "override the tail length");

  CharacterArgs ca;
  auto* character = app.add_subcommand(
      "character", "Graded Schur expansion of a full tensor model");
  character->add_option("--n", ca.n, "rank")->required();
  character->add_option("--k", ca.k, "column height");
  character->add_option("--l", ca.l, "row width");
  character->add_option("--L", ca.L, "number of tensor factors");
  character->add_option("--mu", ca.mu, "column heights, e.g. 3,2,1");
  character->add_option("--format", ca.format, "json | text");

  KostkaArgs ka;
  auto* kostka = app.add_subcommand(
      "kostka", "Charge-statistic polynomial for a shape and content");
  kostka->add_option("--lambda", ka.lambda, "shape, e.g. 2,1")->required();
  kostka->add_option("--mu", ka.mu, "content, e.g. 1,1,1")->required();
  kostka->add_option("--format", ka.format, "json | text");

  auto* verify = app.add_subcommand("verify", "Identity checkers");
  verify->require_subcommand(1);

  VerifyIsoArgs via;
  auto* viso = verify->add_subcommand(
      "iso", "closure sets/edges against the predicted tensor models");
  viso->add_option("--n", via.n, "rank")->required();
  viso->add_option("--k", via.k, "column height");
  viso->add_option("--l", via.l, "row width");
  viso->add_option("--K", via.K, "step or step range, e.g. 4 or 1..6");
  viso->add_option("--L", via.L, "check steps 1..L*d");
  viso->add_option("--truncate", via.truncate, "override the tail length");

  VerifyKostkaArgs vka;
  auto* vkostka = verify->add_subcommand(
      "kostka", "graded rectangular character against the charge oracle");
  vkostka->add_option("--n", vka.n, "rank")->required();
  vkostka->add_option("--l", vka.l, "row width");
  vkostka->add_option("--L", vka.L, "number of tensor factors");

  VerifyInhomArgs vin;
  auto* vinhom = verify->add_subcommand(
      "inhom", "graded column-model character against the charge oracle");
  vinhom->add_option("--n", vin.n, "rank")->required();
  vinhom->add_option("--mu", vin.mu, "column heights, e.g. 3,2,1");

  long long cap = 0;
  app.add_option("--cap", cap, "node budget for closures (env CRYSTAL_CAP)");

  std::vector<const char*> argv;
  argv.push_back("pathcrystal");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const ScopedCap cap_guard(cap);

  try {
    if (graph->parsed()) return run_graph(ga, out);
    if (character->parsed()) return run_character(ca, out);
    if (kostka->parsed()) return run_kostka(ka, out);
    if (viso->parsed()) return run_verify_iso(via, out);
    if (vkostka->parsed()) return run_verify_kostka(vka, out);
    if (vinhom->parsed()) return run_verify_inhom(vin, out);
    err << "error: no command selected\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pathcrystal
