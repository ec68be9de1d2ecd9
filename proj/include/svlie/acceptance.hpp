#pragma once

// The acceptance suite: each criterion runs its checks with exact arithmetic,
// is timed against its budget, and yields one pass/fail line.

#include "svlie/literal.hpp"
#include "svlie/verification.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace svlie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool checks_passed = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool within_budget() const { return seconds <= limit; }
  bool passed() const { return checks_passed && within_budget(); }
};

struct AcceptanceOptions {
  int table_window = 16; // outer window of the tensor regression table
};

inline std::string criterion_line(const CriterionResult &r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed() ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << " (" << r.seconds << " s, budget "
      << r.limit << " s)";
  if (!r.within_budget()) out << " over budget";
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

namespace acceptance {

/// Collects failure notes; an empty log means the criterion held.
class Log {
public:
  void fail(const std::string &what) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
    ok_ = false;
  }
  void note(const std::string &what) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += what;
  }
  void expect(bool cond, const std::string &what) {
    if (!cond) fail(what);
  }
  bool ok() const { return ok_; }
  const std::string &notes() const { return notes_; }

private:
  bool ok_ = true;
  std::string notes_;
};

inline CriterionResult timed(int id, std::string name, double limit, const std::function<void(Log &)> &body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.limit = limit;
  Log log;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(log);
  } catch (const std::exception &e) {
    log.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.checks_passed = log.ok();
  r.detail = log.notes();
  return r;
}

inline std::string count_text(std::size_t got, std::size_t want) {
  return std::to_string(got) + " (expected " + std::to_string(want) + ")";
}

/// Algebra parameter sets used by the Jacobi suite.
inline std::vector<AlgebraParams> jacobi_rows(bool central) {
  std::vector<AlgebraParams> out;
  for (auto [s, l] : std::vector<std::pair<int, Rational>>{
           {1, -1}, {1, -2}, {1, 3}, {0, -2}, {0, -1}, {0, 0}, {0, 1}, {0, 5}, {0, ratio(-5, 3)}})
    out.push_back(make_params(s, l, central));
  return out;
}

/// Every case row of the algebra-valued table, generic lambda sampled by 3 and 5.
inline std::vector<AlgebraParams> algebra_case_rows(bool central) {
  auto rows = table_case_rows(central);
  rows.insert(rows.begin(), make_params(1, 0, central));
  return rows;
}

inline CriterionResult bracket_table() {
  return timed(1, "bracket table", 1, [](Log &log) {
    struct Case {
      int s_twice;
      Rational lambda;
      const char *x, *y, *want;
    };
    const std::vector<Case> cases = {{1, -1, "L[1]", "L[-1]", "-2*L[0]"},
                                     {1, -1, "L[2]", "L[-2]", "-4*L[0] - 1/2*c"},
                                     {1, 3, "Y[1/2]", "Y[-1/2]", "-M[0]"},
                                     {0, -1, "L[1]", "M[2]", "3*M[3]"},
                                     {1, -1, "L[1]", "Y[1/2]", "1/2*Y[3/2]"}};
    for (const auto &c : cases) {
      const auto p = make_params(c.s_twice, c.lambda);
      const std::string got = format(bracket(parse_element(c.x), parse_element(c.y), p));
      log.expect(got == c.want, std::string("[") + c.x + "," + c.y + "] = " + got + ", expected " + c.want);
    }
  });
}

inline CriterionResult jacobi_suite() {
  return timed(2, "Jacobi suite", 60, [](Log &log) {
    std::vector<AlgebraParams> rows = jacobi_rows(true);
    for (const auto &p : jacobi_rows(false)) rows.push_back(p);
    const Window w = Window::symmetric(12);
    auto reports = parallel_map<JacobiReport>(rows.size(), [&](std::size_t i) { return check_jacobi(rows[i], w); });
    std::size_t triples = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      triples += reports[i].triples_checked;
      log.expect(reports[i].passed(), describe(rows[i]) + ": " + std::to_string(reports[i].violations.size()) +
                                          " violating triples");
    }
    log.note(std::to_string(triples) + " triples over " + std::to_string(rows.size()) + " algebras");
  });
}

inline CriterionResult yang_baxter() {
  return timed(3, "CYBE and co-Jacobi identity", 10, [](Log &log) {
    const Tensor2 r = parse_rmatrix_text("1 * L[0] (x) L[1]\n-1 * L[1] (x) L[0]\n");
    const Tensor2 control = parse_rmatrix_text("1 * L[-1] (x) L[2]\n-1 * L[2] (x) L[-1]\n");
    const Window w = Window::symmetric(8);
    for (const auto &p : {make_params(0, 0, true), make_params(1, -2, false), make_params(0, ratio(-5, 3), true)}) {
      log.expect(check_cybe(r, p), describe(p) + ": c(r) != 0");
      log.expect(!check_cybe(control, p), describe(p) + ": control r has c(r) = 0");
      for (const auto &g : generators_in(w, p)) {
        log.expect(check_cojacobi_identity(r, element(g), p), describe(p) + ": identity fails for r at " + to_string(g));
        log.expect(check_cojacobi_identity(control, element(g), p),
                   describe(p) + ": identity fails for control at " + to_string(g));
      }
    }
  });
}

inline CriterionResult derivation_catalog() {
  return timed(4, "derivation catalog", 30, [](Log &log) {
    const Window w = Window::symmetric(16);
    std::size_t tables = 0;
    for (bool central : {true, false})
      for (const auto &p : algebra_case_rows(central)) {
        auto check = [&](const std::string &name, const auto &table) {
          ++tables;
          const auto rep = is_derivation(table, p);
          log.expect(rep.passed(), describe(p) + ": " + name + " fails on " + std::to_string(rep.violations.size()) +
                                       " components");
        };
        for (const auto &nd : catalog_parameter_basis<Element>(p, w)) check(nd.name, nd.table);
        for (const auto &name : named_basis(p)) check(name, lemma_derivation(name, p, w));
        if (case_row(p) != CaseRow::Orig0)
          for (const auto &nd : catalog_parameter_basis<Tensor2>(p, w)) check(nd.name, nd.table);
      }
    struct Control {
      const char *name;
      AlgebraParams p;
    };
    const std::vector<Control> controls = {{"d_2^-2", make_params(0, -1)},
                                           {"D_2^-2", make_params(1, -1)},
                                           {"D_2^-1", make_params(1, 3)},
                                           {"d_2^-1", make_params(0, -2)},
                                           {"d_2^1", make_params(0, 5)}};
    for (const auto &c : controls) {
      const auto rep = is_derivation(lemma_derivation(c.name, c.p, w), c.p);
      log.expect(!rep.passed(), std::string(c.name) + " under " + describe(c.p) + " passes but should fail");
      if (!rep.passed()) {
        const auto &v = rep.violations.front();
        log.note(std::string(c.name) + " under " + describe(c.p) + " fails at (" + to_string(v.x) + ", " +
                 to_string(v.y) + ")");
      }
    }
    log.note(std::to_string(tables) + " catalog tables verified");
  });
}

inline CriterionResult algebra_h1_table() {
  return timed(5, "H1(L,L)_0 dimension table", 300, [](Log &log) {
    std::vector<AlgebraParams> rows;
    for (bool central : {true, false}) {
      for (const auto &p : algebra_case_rows(central)) rows.push_back(p);
      for (int s : {1, 0})
        for (const Rational &l : {ratio(1, 2), ratio(-5, 3)}) rows.push_back(make_params(s, l, central));
    }
    const std::vector<int> windows = {12, 16, 20};
    const auto dims = parallel_map<std::vector<std::size_t>>(rows.size(), [&](std::size_t i) {
      std::vector<std::size_t> out;
      for (int n : windows)
        out.push_back(solve_h1(rows[i], TargetSpace::Algebra, HalfInt{0}, Window::symmetric(n), false).dim_h1);
      return out;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t want = named_basis(rows[i]).size();
      for (std::size_t k = 0; k < windows.size(); ++k)
        log.expect(dims[i][k] == want, describe(rows[i]) + " N=" + std::to_string(windows[k]) + ": dim " +
                                           count_text(dims[i][k], want));
    }
  });
}

inline CriterionResult nonzero_degrees() {
  return timed(6, "nonzero-degree innerness", 300, [](Log &log) {
    struct Job {
      AlgebraParams p;
      TargetSpace target;
      HalfInt alpha;
    };
    std::vector<Job> jobs;
    for (bool central : {true, false})
      for (const auto &p : algebra_case_rows(central))
        for (TargetSpace t : {TargetSpace::Algebra, TargetSpace::TensorSquare})
          for (int a = -4; a <= 4; ++a)
            if (a != 0) jobs.push_back({p, t, HalfInt{a}});
    const Window w = Window::symmetric(12);
    const auto dims = parallel_map<std::size_t>(
        jobs.size(), [&](std::size_t i) { return solve_h1(jobs[i].p, jobs[i].target, jobs[i].alpha, w, false).dim_h1; });
    for (std::size_t i = 0; i < jobs.size(); ++i)
      log.expect(dims[i] == 0, describe(jobs[i].p) + " " + to_string(jobs[i].target) +
                                   " alpha=" + to_string(jobs[i].alpha) + ": dim " + std::to_string(dims[i]));
    log.note(std::to_string(jobs.size()) + " systems");
  });
}

inline CriterionResult tensor_table(const AcceptanceOptions &opt) {
  return timed(7, "tensor H1 table and triangularity verdicts", 600, [&](Log &log) {
    std::vector<AlgebraParams> rows = table_case_rows(true);
    for (const auto &p : table_case_rows(false)) rows.push_back(p);
    const auto table = paper_table_regression(rows, Window::symmetric(opt.table_window));
    for (const auto &row : table) {
      const auto &p = row.report.params;
      if (row.report.dim_h1 != row.expected_dim)
        log.fail(describe(p) + ": dim " + count_text(row.report.dim_h1, row.expected_dim));
      if (row.triangular != row.expected_verdict)
        log.fail(describe(p) + ": verdict " + (row.triangular ? "triangular" : "not triangular"));
      if (!row.certificate_ok()) log.fail(describe(p) + ": catalog does not span independent classes");
    }
  });
}

inline CriterionResult invariants_and_skew_image() {
  return timed(8, "invariant tensors and skew-image inclusion", 120, [](Log &log) {
    const Window w = Window::symmetric(12);
    for (const auto &p : {make_params(0, 0, true), make_params(1, -2, true), make_params(1, 3, false)}) {
      for (int n : {1, 2}) {
        const auto r = verify_invariants_are_central(p, n, w);
        log.expect(r.passed(), describe(p) + " order " + std::to_string(n) + ": invariants " +
                                   std::to_string(r.kernel_dim) + " vs center products " +
                                   std::to_string(r.center_products));
      }
      const auto s = verify_skew_image_lemma(p, w);
      log.expect(s.passed(), describe(p) + ": (1+tau)W not inside (1+tau)(C(x)C)");
      log.expect(skew_image_witness(tensor(element(L(1)), element(L(1))), p, w).has_value(),
                 describe(p) + ": L[1] (x) L[1] lies in W");
    }
  });
}

inline CriterionResult center_tensor_identity() {
  return timed(9, "center-tensor identity", 120, [](Log &log) {
    const Window w = Window::symmetric(12);
    for (const auto &p : {make_params(0, -2, true), make_params(1, 3, true), make_params(1, 3, false)}) {
      const auto r = verify_center_tensor_identity(p, w);
      log.expect(r.passed(), describe(p) + ": left " + std::to_string(r.left) + " right " + std::to_string(r.right));
      log.note(describe(p) + ": " + std::to_string(r.left) + " = " + std::to_string(r.right));
    }
  });
}

} // namespace acceptance

/// Criteria 1 to 9 in order.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &opt,
                                                   const std::function<void(const CriterionResult &)> &on_done = {}) {
  using namespace acceptance;
  std::vector<std::function<CriterionResult()>> jobs = {
      bracket_table,   jacobi_suite,    yang_baxter,
      derivation_catalog, algebra_h1_table, nonzero_degrees,
      [&] { return tensor_table(opt); }, invariants_and_skew_image, center_tensor_identity};
  std::vector<CriterionResult> out;
  for (const auto &job : jobs) {
    out.push_back(job());
    if (on_done) on_done(out.back());
  }
  return out;
}

} // namespace svlie
