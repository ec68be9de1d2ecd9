// svlie: command-line front end of the workbench.
//
// Exit codes: 0 every check passed, 1 a check failed (a witness is printed),
// 2 malformed input or unknown command.

#include "svlie/acceptance.hpp"
#include "svlie/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace svlie;

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;
constexpr int kWindowGuard = 64;

/// Input errors detected after option parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct JobConfig {
  std::string s = "0";
  std::string lambda = "0";
  std::string central = "true";
  std::optional<int> window; // per-command default when absent
  std::string degree = "0";
  std::string r_path;
  std::string derivation_path;
  std::string target = "tensor-square";
  int rank = 2;
  bool json = false;
  std::vector<std::string> literals;

  AlgebraParams params() const {
    int s_twice;
    if (s == "0") {
      s_twice = 0;
    } else if (s == "1/2") {
      s_twice = 1;
    } else {
      throw UsageError("--s must be 0 or 1/2, got '" + s + "'");
    }
    auto l = try_parse_rational(lambda);
    if (!l) throw UsageError("--lambda must be an exact rational like -5/3, got '" + lambda + "'");
    bool c;
    if (central == "true") {
      c = true;
    } else if (central == "false") {
      c = false;
    } else {
      throw UsageError("--central must be true or false, got '" + central + "'");
    }
    return make_params(s_twice, *l, c);
  }

  Window win(int fallback = 12) const {
    const int n = window.value_or(fallback);
    if (n < 0 || n > kWindowGuard)
      throw UsageError("--window must lie in [0, " + std::to_string(kWindowGuard) + "]");
    return Window::symmetric(n);
  }

  HalfInt alpha() const {
    auto h = try_parse_half_int(degree);
    if (!h) throw UsageError("--degree must be an integer or a half-integer, got '" + degree + "'");
    return *h;
  }

  TargetSpace target_space() const {
    if (target == "algebra") return TargetSpace::Algebra;
    if (target == "tensor-square") return TargetSpace::TensorSquare;
    if (target == "center-tensor") return TargetSpace::CenterTensor;
    throw UsageError("--target must be algebra, tensor-square or center-tensor");
  }
};

Json header(const std::string &command, const AlgebraParams &p, const Window &w) {
  return Json{{"schema", kReportSchema}, {"command", command}, {"case", params_json(p)}, {"window", window_json(w)}};
}

void emit(const JobConfig &cfg, const Json &j, const std::string &human) {
  if (cfg.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

Tensor2 read_rmatrix(const JobConfig &cfg, const AlgebraParams &p) {
  if (cfg.r_path.empty()) throw UsageError("--r FILE is required");
  std::ifstream in(cfg.r_path);
  if (!in) throw UsageError("cannot open r-matrix file '" + cfg.r_path + "'");
  Tensor2 r = parse_rmatrix(in);
  for (const auto &[k, c] : r) require_valid_key(k, p);
  if (!is_skew(r)) std::cerr << "warning: r is not skew; Delta_r need not be a Lie cobracket\n";
  return r;
}

Element literal_arg(const JobConfig &cfg, std::size_t i, const AlgebraParams &p) {
  if (i >= cfg.literals.size()) throw UsageError("missing element argument");
  Element e = parse_element(cfg.literals[i]);
  for (const auto &[b, c] : e) require_valid(b, p);
  return e;
}

// --- commands --------------------------------------------------------------

int cmd_bracket(const JobConfig &cfg) {
  const auto p = cfg.params();
  if (cfg.literals.size() != 2) throw UsageError("bracket needs exactly two elements");
  const Element v = bracket(literal_arg(cfg, 0, p), literal_arg(cfg, 1, p), p);
  Json j = Json{{"schema", kReportSchema}, {"command", "bracket"}, {"case", params_json(p)}, {"value", format(v)}};
  emit(cfg, j, format(v) + "\n");
  return kPass;
}

int cmd_jacobi(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win();
  const auto rep = check_jacobi(p, w);
  Json j = header("jacobi", p, w);
  j["triples_checked"] = rep.triples_checked;
  j["violations"] = rep.violations.size();
  std::ostringstream h;
  h << "Jacobi: " << (rep.passed() ? "satisfied" : "violated") << " on " << rep.triples_checked << " triples\n";
  if (!rep.passed()) {
    const auto &v = rep.violations.front();
    std::string t = to_string(v.triple[0]) + ", " + to_string(v.triple[1]) + ", " + to_string(v.triple[2]);
    j["witness"] = Json{{"triple", t}, {"value", format(v.value)}};
    h << "witness: (" << t << ") -> " << format(v.value) << "\n";
  }
  emit(cfg, j, h.str());
  return rep.passed() ? kPass : kCheckFailed;
}

int cmd_cybe(const JobConfig &cfg) {
  const auto p = cfg.params();
  const Tensor2 r = read_rmatrix(cfg, p);
  const Tensor3 cr = ybe_c(r, p);
  Json j = Json{{"schema", kReportSchema}, {"command", "cybe"}, {"case", params_json(p)},
                {"satisfied", cr.is_zero()}, {"c_r", format(cr)}};
  std::string h = cr.is_zero() ? "CYBE: satisfied\n" : "CYBE: violated\nc(r) = " + format(cr) + "\n";
  emit(cfg, j, h);
  return cr.is_zero() ? kPass : kCheckFailed;
}

int cmd_mybe(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win();
  const Tensor2 r = read_rmatrix(cfg, p);
  const auto rep = check_mybe_report(r, p, w);
  Json j = header("mybe", p, w);
  j["satisfied"] = rep.satisfied;
  j["witness"] = rep.witness ? Json(to_string(*rep.witness)) : Json(nullptr);
  std::string h = rep.satisfied ? "MYBE: satisfied\n"
                                : "MYBE: violated\nwitness: " + to_string(*rep.witness) + " moves c(r)\n";
  emit(cfg, j, h);
  return rep.satisfied ? kPass : kCheckFailed;
}

int cmd_coboundary(const JobConfig &cfg) {
  const auto p = cfg.params();
  const Tensor2 r = read_rmatrix(cfg, p);
  const Tensor2 v = coboundary(r, literal_arg(cfg, 0, p), p);
  Json j = Json{{"schema", kReportSchema}, {"command", "coboundary"}, {"case", params_json(p)}, {"value", format(v)}};
  emit(cfg, j, format(v) + "\n");
  return kPass;
}

int cmd_cojacobi(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win(8);
  const Tensor2 r = read_rmatrix(cfg, p);
  std::vector<Element> xs;
  if (cfg.literals.empty()) {
    for (const auto &g : generators_in(w, p)) xs.push_back(element(g));
  } else {
    for (std::size_t i = 0; i < cfg.literals.size(); ++i) xs.push_back(literal_arg(cfg, i, p));
  }
  std::optional<Element> witness;
  for (const auto &x : xs)
    if (!check_cojacobi_identity(r, x, p)) {
      witness = x;
      break;
    }
  Json j = header("cojacobi", p, w);
  j["elements_checked"] = xs.size();
  j["holds"] = !witness;
  j["witness"] = witness ? Json(format(*witness)) : Json(nullptr);
  std::string h = witness ? "co-Jacobi identity: fails at " + format(*witness) + "\n"
                          : "co-Jacobi identity: holds on " + std::to_string(xs.size()) + " elements\n";
  emit(cfg, j, h);
  return witness ? kCheckFailed : kPass;
}

template <class V> int check_table(const JobConfig &cfg, const Json &doc, const AlgebraParams &p) {
  const auto table = table_from_json<V>(doc);
  const auto rep = is_derivation(table, p);
  Json j = header("check-derivation", p, table.window);
  j["target"] = to_string(DerivationTable<V>::target);
  j["pairs_checked"] = rep.pairs_checked;
  j["pairs_skipped"] = rep.pairs_skipped;
  j["violations"] = rep.violations.size();
  std::ostringstream h;
  h << "derivation: " << (rep.passed() ? "valid" : "invalid") << " (" << rep.pairs_checked << " pairs checked, "
    << rep.pairs_skipped << " skipped)\n";
  if (!rep.passed()) {
    const auto &v = rep.violations.front();
    const std::string comp = format(LinearCombination<typename V::key_type>(v.component));
    j["witness"] = Json{{"x", to_string(v.x)}, {"y", to_string(v.y)}, {"component", comp},
                        {"residual", to_string(v.residual)}};
    h << "witness: pair (" << to_string(v.x) << ", " << to_string(v.y) << "), component " << comp << ", residual "
      << to_string(v.residual) << "\n";
  }
  emit(cfg, j, h.str());
  return rep.passed() ? kPass : kCheckFailed;
}

int cmd_check_derivation(const JobConfig &cfg) {
  const auto p = cfg.params();
  if (cfg.derivation_path.empty()) throw UsageError("--derivation FILE is required");
  std::ifstream in(cfg.derivation_path);
  if (!in) throw UsageError("cannot open derivation file '" + cfg.derivation_path + "'");
  const Json doc = Json::parse(in);
  if (table_target(doc) == Target::Algebra) return check_table<Element>(cfg, doc, p);
  return check_table<Tensor2>(cfg, doc, p);
}

int cmd_h1(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto rep = solve_h1(p, cfg.target_space(), cfg.alpha(), cfg.win());
  std::ostringstream h;
  h << describe(p) << " target=" << to_string(rep.target) << " alpha=" << to_string(rep.alpha) << "\n"
    << "dim Der = " << rep.dim_der << ", dim Inn = " << rep.dim_inn << ", dim H1 = " << rep.dim_h1 << "\n";
  if (rep.certificate)
    h << "catalog: " << rep.certificate->names.size() << " tables, rank " << rep.certificate->rank_mod_inner
      << " modulo inner" << (rep.certificate->all_in_kernel ? "" : ", NOT all derivations") << "\n";
  emit(cfg, report_to_json(rep), h.str());
  return rep.inner_in_kernel ? kPass : kCheckFailed;
}

int cmd_center(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win();
  Json basis = Json::array();
  std::string h;
  for (const auto &z : center_in_window(p, w)) {
    basis.push_back(format(z));
    h += format(z) + "\n";
  }
  if (basis.empty()) h = "0\n";
  Json j = header("center", p, w);
  j["basis"] = basis;
  emit(cfg, j, h);
  return kPass;
}

int cmd_invariants(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win();
  if (cfg.rank != 1 && cfg.rank != 2) throw UsageError("--rank must be 1 or 2");
  const auto rep = verify_invariants_are_central(p, cfg.rank, w);
  Json j = header("invariants", p, w);
  j["rank"] = cfg.rank;
  j["candidates"] = rep.candidates;
  j["kernel_dim"] = rep.kernel_dim;
  j["center_products"] = rep.center_products;
  j["passed"] = rep.passed();
  std::ostringstream h;
  h << "invariant tensors: " << rep.kernel_dim << ", center products: " << rep.center_products << " -> "
    << (rep.passed() ? "invariants are central" : "non-central invariant found") << "\n";
  emit(cfg, j, h.str());
  return rep.passed() ? kPass : kCheckFailed;
}

int cmd_skew_lemma(const JobConfig &cfg) {
  const auto p = cfg.params();
  const auto w = cfg.win();
  const auto rep = verify_skew_image_lemma(p, w);
  Json j = header("skew-lemma", p, w);
  j["candidates"] = rep.candidates;
  j["dim_w"] = rep.dim_w;
  j["sym_rank"] = rep.sym_rank;
  j["center_sym_rank"] = rep.center_sym;
  j["passed"] = rep.passed();
  std::ostringstream h;
  h << "dim W = " << rep.dim_w << ", symmetric image rank " << rep.sym_rank << " (center part " << rep.center_sym
    << ") -> " << (rep.passed() ? "inclusion holds" : "inclusion fails") << "\n";
  emit(cfg, j, h.str());
  return rep.passed() ? kPass : kCheckFailed;
}

int cmd_verify_paper(const JobConfig &cfg) {
  AcceptanceOptions opt;
  opt.table_window = cfg.win(opt.table_window).hi;
  Json lines = Json::array();
  const auto results = run_acceptance(opt, [&](const CriterionResult &r) {
    if (!cfg.json) std::cout << criterion_line(r) << std::endl;
  });
  bool all = true;
  for (const auto &r : results) {
    all = all && r.passed();
    lines.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed()},
                         {"seconds", r.seconds},
                         {"budget", r.limit},
                         {"detail", r.detail}});
  }
  if (cfg.json) {
    Json j = Json{{"schema", kReportSchema}, {"command", "verify-paper"}, {"table_window", opt.table_window},
                  {"criteria", lines}, {"passed", all}};
    std::cout << j.dump(2) << "\n";
  }
  return all ? kPass : kCheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact workbench for the deformative Schroedinger-Virasoro algebras L^s_lambda"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto common = [&](CLI::App *sub, int default_window) {
    sub->add_option("--s", cfg.s, "s in {0, 1/2}")->capture_default_str();
    sub->add_option("--lambda", cfg.lambda, "exact rational lambda")->capture_default_str();
    sub->add_option("--central", cfg.central, "keep the central element c (true|false)")->capture_default_str();
    sub->add_flag("--json", cfg.json, "emit a JSON report");
    sub->add_option("--window", cfg.window, "doubled-degree bound N, window [-N, N]")
        ->default_str(std::to_string(default_window));
  };

  auto *bracket_cmd = app.add_subcommand("bracket", "bracket of two elements");
  common(bracket_cmd, 12);
  bracket_cmd->add_option("elements", cfg.literals, "two element literals")->expected(2);

  auto *jacobi_cmd = app.add_subcommand("jacobi", "Jacobi identity on window triples");
  common(jacobi_cmd, 12);

  auto *cybe_cmd = app.add_subcommand("cybe", "classical Yang-Baxter equation c(r) = 0");
  common(cybe_cmd, 12);
  cybe_cmd->add_option("--r", cfg.r_path, "r-matrix file")->required();

  auto *mybe_cmd = app.add_subcommand("mybe", "modified Yang-Baxter equation x.c(r) = 0");
  common(mybe_cmd, 12);
  mybe_cmd->add_option("--r", cfg.r_path, "r-matrix file")->required();

  auto *cob_cmd = app.add_subcommand("coboundary", "Delta_r(x) = x.r");
  common(cob_cmd, 12);
  cob_cmd->add_option("--r", cfg.r_path, "r-matrix file")->required();
  cob_cmd->add_option("element", cfg.literals, "element literal")->expected(1)->required();

  auto *coj_cmd = app.add_subcommand("cojacobi", "co-Jacobi identity against x.c(r)");
  common(coj_cmd, 8);
  coj_cmd->add_option("--r", cfg.r_path, "r-matrix file")->required();
  coj_cmd->add_option("elements", cfg.literals, "elements (default: every window generator)");

  auto *der_cmd = app.add_subcommand("check-derivation", "check a derivation table");
  common(der_cmd, 12);
  der_cmd->add_option("--derivation", cfg.derivation_path, "derivation table JSON")->required();

  auto *h1_cmd = app.add_subcommand("h1", "degree-alpha first cohomology on a window");
  common(h1_cmd, 12);
  h1_cmd->add_option("--degree", cfg.degree, "degree alpha (integer or half-integer)")->capture_default_str();
  h1_cmd->add_option("--target", cfg.target, "algebra | tensor-square | center-tensor")->capture_default_str();

  auto *center_cmd = app.add_subcommand("center", "center of the algebra inside the window");
  common(center_cmd, 12);

  auto *inv_cmd = app.add_subcommand("invariants", "invariant tensors against center products");
  common(inv_cmd, 12);
  inv_cmd->add_option("--rank", cfg.rank, "tensor order 1 or 2")->capture_default_str();

  auto *skew_cmd = app.add_subcommand("skew-lemma", "skew-image inclusion");
  common(skew_cmd, 12);

  auto *verify_cmd = app.add_subcommand("verify-paper", "run the acceptance criteria");
  common(verify_cmd, 16);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*bracket_cmd) return cmd_bracket(cfg);
    if (*jacobi_cmd) return cmd_jacobi(cfg);
    if (*cybe_cmd) return cmd_cybe(cfg);
    if (*mybe_cmd) return cmd_mybe(cfg);
    if (*cob_cmd) return cmd_coboundary(cfg);
    if (*coj_cmd) return cmd_cojacobi(cfg);
    if (*der_cmd) return cmd_check_derivation(cfg);
    if (*h1_cmd) return cmd_h1(cfg);
    if (*center_cmd) return cmd_center(cfg);
    if (*inv_cmd) return cmd_invariants(cfg);
    if (*skew_cmd) return cmd_skew_lemma(cfg);
    if (*verify_cmd) return cmd_verify_paper(cfg);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception &e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument &e) {
    // UsageError, FormatError, InvalidIndex and CaseError
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
