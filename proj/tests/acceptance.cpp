// Acceptance suite: one pass/fail line per criterion. Exit code is the
// number of failed criteria. Usage: acceptance [cli-binary] [data-dir]

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert/axioms.hpp"
#include "hilbert/model_finder.hpp"
#include "hilbert/ordering.hpp"
#include "hilbert/property_suites.hpp"
#include "hilbert/sampling.hpp"
#include "hilbert/successor.hpp"

using namespace hilbert;

namespace {

std::string g_cli;
std::string g_data;
int g_failures = 0;

void criterion(int number, const std::string &title, double time_limit_s,
               const std::function<bool(std::string &)> &body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception &e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && time_limit_s > 0 && elapsed > time_limit_s) {
    ok = false;
    detail = "over time budget";
  }
  if (!ok) ++g_failures;
  std::ostringstream line;
  line << "criterion " << number << " [" << (ok ? "PASS" : "FAIL") << "] " << title << " ("
       << elapsed << "s)";
  if (!ok && !detail.empty()) line << " -- " << detail;
  std::cout << line.str() << "\n";
}

int run_cli(const std::string &args) {
  int status = std::system((g_cli + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool passes_group_i(const FiniteIncidenceStructure &s) {
  auto reports = check_group_i(s);
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport &r) { return r.verdict == Verdict::holds; });
}

Diagram reference_seed() {
  RatPoint a{0, 0}, b{1, 1}, c{2, 2}, d{0, -2}, zero{1, 0};
  return make_diagram(a, b, c, d, zero, zero);
}

bool labeling_valid(const std::vector<RatPoint> &seq) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      for (std::size_t k = j + 1; k < seq.size(); ++k)
        if (!between(seq[i], seq[j], seq[k])) return false;
  return true;
}

std::vector<RatPoint> sample_collinear(Sampler &s, std::size_t n) {
  RatPoint origin = s.point();
  RatPoint tip = s.point_distinct_from(origin);
  std::vector<Rational> ts;
  while (ts.size() < n) {
    Rational t = s.rational();
    if (std::find(ts.begin(), ts.end(), t) == ts.end()) ts.push_back(t);
  }
  std::vector<RatPoint> pts;
  for (const auto &t : ts)
    pts.push_back(RatPoint{origin.x + t * (tip.x - origin.x),
                           origin.y + t * (tip.y - origin.y)});
  return pts;
}

}  // namespace

int main(int argc, char **argv) {
  g_cli = argc > 1 ? argv[1] : "";
  g_data = argc > 2 ? argv[2] : "data";

  criterion(1, "tetrahedron validation and mutation testing", 1.0, [](std::string &detail) {
    if (!g_cli.empty() &&
        run_cli("check-model --file " + g_data + "/tetrahedron.model --group I") != 0) {
      detail = "check-model on the bundled tetrahedron did not exit 0";
      return false;
    }
    auto base = tetrahedron();
    if (!passes_group_i(base)) {
      detail = "tetrahedron does not satisfy Group I";
      return false;
    }
    int mutations = 0;
    for (const auto &pair : base.on_line) {
      auto mutant = base;
      mutant.on_line.erase(pair);
      auto reports = check_group_i(mutant);
      bool caught = std::any_of(reports.begin(), reports.end(), [](const AxiomReport &r) {
        return r.verdict == Verdict::fails;
      });
      if (!caught) {
        detail = "deleting (" + pair.first + "," + pair.second + ") went unnoticed";
        return false;
      }
      ++mutations;
    }
    if (mutations != 12) {
      detail = "expected 12 point-line incidences";
      return false;
    }
    return true;
  });

  criterion(2, "minimality of the 14-object model", 60.0, [](std::string &detail) {
    for (SearchBounds b : {SearchBounds{3, 6, 4}, SearchBounds{4, 5, 4}, SearchBounds{4, 6, 3}}) {
      if (find_minimum(b).satisfiable) {
        detail = "dominated bounds unexpectedly satisfiable";
        return false;
      }
    }
    auto outcome = find_minimum({4, 6, 4});
    if (!outcome.satisfiable || outcome.minimal_models.empty()) {
      detail = "bounds (4,6,4) not satisfiable";
      return false;
    }
    for (const auto &m : outcome.minimal_models)
      if (!isomorphic(m, tetrahedron()) || !passes_group_i(m)) {
        detail = "a reported minimal model is not the tetrahedron class";
        return false;
      }
    if (!g_cli.empty()) {
      if (run_cli("find-min-model --max-points 3 --max-lines 6 --max-planes 4") != 1 ||
          run_cli("find-min-model --max-points 4 --max-lines 6 --max-planes 4") != 0) {
        detail = "find-min-model exit codes disagree";
        return false;
      }
    }
    return true;
  });

  criterion(3, "no finite linear order models on 3 or 4 points", 60.0, [](std::string &detail) {
    for (int n : {3, 4}) {
      auto result = search_linear_order_models(n);
      if (result.model) {
        detail = "a relation on " + std::to_string(n) + " points satisfied II,1-II,3";
        return false;
      }
    }
    return true;
  });

  criterion(4, "order axioms II,1-II,4: 10000 exact samples each", 0, [](std::string &detail) {
    auto suites = run_plane_suites(kDefaultSeed, 10000);
    for (const auto &s : suites) {
      if (s.name.rfind("II,", 0) != 0) continue;
      if (s.failures != 0) {
        detail = s.name + " had " + std::to_string(s.failures) + " failures";
        return false;
      }
    }
    return true;
  });

  criterion(5, "successor trace and closed form on the reference seed", 0,
            [](std::string &detail) {
    auto d = reference_seed();
    const std::vector<RatPoint> expect = {{Rational(2, 3), 0},
                                          {Rational(1, 2), 0},
                                          {Rational(2, 5), 0}};
    for (int n = 1; n <= 3; ++n)
      if (nat_point(d, n) != expect[n - 1]) {
        detail = "step " + std::to_string(n) + " is not the expected point";
        return false;
      }
    for (int n = 0; n <= 50; ++n)
      if (nat_point(d, n) != RatPoint{Rational(2, n + 2), 0}) {
        detail = "closed form 2/(n+2) broke at n=" + std::to_string(n);
        return false;
      }
    return true;
  });

  criterion(6, "Dedekind-infinity evidence on 200 random diagrams", 30.0,
            [](std::string &detail) {
    Sampler sampler(kDefaultSeed);
    for (int i = 0; i < 200; ++i) {
      Diagram d = sampler.diagram();
      if (!verify_injective(d, 20)) {
        detail = "orbit " + std::to_string(i) + " failed the distinctness chain";
        return false;
      }
      // per-step strict descent toward A
      Diagram cur = d;
      for (int step = 0; step < 20; ++step) {
        auto next = successor(cur).output;
        if (next.N == d.zero || !between(d.A, next.N, d.zero) ||
            (cur.N != d.zero && !between(d.A, next.N, cur.N))) {
          detail = "strict descent violated";
          return false;
        }
        cur = next;
      }
    }
    return true;
  });

  criterion(7, "theorem 6: exactly two labelings, sorter returns one", 0,
            [](std::string &detail) {
    Sampler sampler(kDefaultSeed + 7);
    for (int sample = 0; sample < 50; ++sample) {
      std::size_t n = 2 + sample % 5;  // sizes 2..6
      auto pts = sample_collinear(sampler, n);
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      int valid = 0;
      bool matched = false;
      auto result = order_collinear(pts);
      do {
        std::vector<RatPoint> seq;
        for (std::size_t i : perm) seq.push_back(pts[i]);
        if (labeling_valid(seq)) {
          ++valid;
          if (seq == result.labels) matched = true;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (valid != 2) {
        detail = "found " + std::to_string(valid) + " valid labelings";
        return false;
      }
      if (!matched) {
        detail = "order_collinear returned an invalid labeling";
        return false;
      }
    }
    // coordinate-order agreement up to 10 points
    Sampler sampler2(kDefaultSeed + 8);
    for (int sample = 0; sample < 50; ++sample) {
      auto pts = sample_collinear(sampler2, 2 + sample % 9);
      auto result = order_collinear(pts);
      auto sorted = result.labels;
      std::sort(sorted.begin(), sorted.end(), [](const RatPoint &a, const RatPoint &b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
      });
      if (result.labels != sorted && result.reversed != sorted) {
        detail = "sorter disagrees with coordinate order";
        return false;
      }
    }
    return true;
  });

  criterion(8, "theorem 3 construction on 1000 random instances", 0, [](std::string &detail) {
    Sampler sampler(kDefaultSeed + 9);
    for (int i = 0; i < 1000; ++i) {
      RatPoint a = sampler.point();
      RatPoint c = sampler.point_distinct_from(a);
      RatPoint e = sampler.point_off_line(a, c);
      if (!between(a, theorem3_point(a, c, e), c)) {
        detail = "instance " + std::to_string(i) + " not strictly between";
        return false;
      }
    }
    return true;
  });

  std::cout << (g_failures == 0 ? "all criteria passed" : "criteria failed: ")
            << (g_failures == 0 ? std::string() : std::to_string(g_failures)) << "\n";
  return g_failures;
}
