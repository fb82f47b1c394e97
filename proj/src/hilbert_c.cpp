#include "hilbert/hilbert_c.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert/axioms.hpp"
#include "hilbert/model_finder.hpp"
#include "hilbert/ordering.hpp"
#include "hilbert/property_suites.hpp"
#include "hilbert/structure.hpp"
#include "hilbert/successor.hpp"

namespace {

thread_local hg_status g_status = HG_OK;
thread_local std::string g_error;

void set_ok() {
  g_status = HG_OK;
  g_error.clear();
}

void set_error(hg_status status, const std::string &msg) {
  g_status = status;
  g_error = msg;
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs fn, translating C++ errors into the thread-local status.
template <typename T, typename Fn>
T guarded(T fail_value, Fn &&fn) {
  try {
    set_ok();
    return fn();
  } catch (const hilbert::parse_error &e) {
    set_error(HG_ERR_PARSE, e.what());
  } catch (const hilbert::internal_consistency_error &e) {
    set_error(HG_ERR_INTERNAL, e.what());
  } catch (const hilbert::oracle_fault &e) {
    set_error(HG_ERR_INTERNAL, e.what());
  } catch (const std::logic_error &e) {
    // degenerate_input, diagram_error, bounds_error derive from
    // invalid_argument; other logic errors are defects
    if (dynamic_cast<const std::invalid_argument *>(&e))
      set_error(HG_ERR_INVALID, e.what());
    else
      set_error(HG_ERR_INTERNAL, e.what());
  } catch (const std::exception &e) {
    set_error(HG_ERR_INVALID, e.what());
  }
  return fail_value;
}

}  // namespace

struct hg_model {
  hilbert::FiniteIncidenceStructure s;
};

struct hg_reports {
  std::vector<hilbert::AxiomReport> reports;
  mutable std::vector<std::string> axiom_names;
  mutable std::vector<std::string> witnesses;  // "" when absent

  void build_strings() const {
    axiom_names.clear();
    witnesses.clear();
    for (const auto &r : reports) {
      axiom_names.push_back(hilbert::to_string(r.axiom));
      std::string w;
      if (r.witness) {
        for (const auto &name : *r.witness) {
          if (!w.empty()) w += ' ';
          w += name;
        }
      }
      witnesses.push_back(w);
    }
  }
};

struct hg_search {
  hilbert::SearchOutcome outcome;
};

struct hg_diagram {
  hilbert::Diagram d;
};

extern "C" {

hg_status hg_last_status(void) { return g_status; }

const char *hg_last_error(void) { return g_error.c_str(); }

void hg_string_free(char *s) { std::free(s); }

hg_model *hg_model_parse(const char *text) {
  return guarded<hg_model *>(nullptr, [&] {
    return new hg_model{hilbert::parse_model(text ? text : "")};
  });
}

hg_model *hg_model_tetrahedron(void) { return new hg_model{hilbert::tetrahedron()}; }

char *hg_model_serialize(const hg_model *m) {
  return guarded<char *>(nullptr, [&] { return dup_string(hilbert::serialize_model(m->s)); });
}

int hg_model_isomorphic(const hg_model *a, const hg_model *b) {
  return guarded(-1, [&] { return hilbert::isomorphic(a->s, b->s) ? 1 : 0; });
}

void hg_model_free(hg_model *m) { delete m; }

hg_reports *hg_check_group_i(const hg_model *m) {
  return guarded<hg_reports *>(nullptr, [&] {
    auto r = new hg_reports{hilbert::check_group_i(m->s), {}, {}};
    r->build_strings();
    return r;
  });
}

hg_reports *hg_check_group_ii_linear(const char *text) {
  return guarded<hg_reports *>(nullptr, [&] {
    auto model = hilbert::parse_betweenness(text ? text : "");
    auto r = new hg_reports{hilbert::check_group_ii_linear(model), {}, {}};
    r->build_strings();
    return r;
  });
}

int hg_reports_count(const hg_reports *r) { return static_cast<int>(r->reports.size()); }

const char *hg_reports_axiom(const hg_reports *r, int i) {
  if (i < 0 || i >= hg_reports_count(r)) return nullptr;
  return r->axiom_names[i].c_str();
}

int hg_reports_verdict(const hg_reports *r, int i) {
  if (i < 0 || i >= hg_reports_count(r)) return -1;
  switch (r->reports[i].verdict) {
    case hilbert::Verdict::holds: return HG_HOLDS;
    case hilbert::Verdict::fails: return HG_FAILS;
    case hilbert::Verdict::vacuous: return HG_VACUOUS;
  }
  return -1;
}

const char *hg_reports_witness(const hg_reports *r, int i) {
  if (i < 0 || i >= hg_reports_count(r)) return nullptr;
  if (!r->reports[i].witness) return nullptr;
  return r->witnesses[i].c_str();
}

void hg_reports_free(hg_reports *r) { delete r; }

hg_search *hg_find_min_model(int max_points, int max_lines, int max_planes) {
  return guarded<hg_search *>(nullptr, [&] {
    hilbert::SearchBounds bounds{max_points, max_lines, max_planes};
    return new hg_search{hilbert::find_minimum(bounds)};
  });
}

int hg_search_satisfiable(const hg_search *s) { return s->outcome.satisfiable ? 1 : 0; }

int hg_search_model_count(const hg_search *s) {
  return static_cast<int>(s->outcome.minimal_models.size());
}

hg_model *hg_search_model(const hg_search *s, int i) {
  if (i < 0 || i >= hg_search_model_count(s)) {
    set_error(HG_ERR_INVALID, "model index out of range");
    return nullptr;
  }
  set_ok();
  return new hg_model{s->outcome.minimal_models[i]};
}

unsigned long long hg_search_examined(const hg_search *s) {
  return s->outcome.structures_examined;
}

double hg_search_elapsed_seconds(const hg_search *s) { return s->outcome.elapsed.count(); }

void hg_search_free(hg_search *s) { delete s; }

int hg_no_linear_order_model(int n_points, unsigned long long *nodes_examined) {
  return guarded(-1, [&] {
    if (n_points < 0 || n_points > 4)
      throw hilbert::bounds_error("linear order search supports 0..4 points");
    auto result = hilbert::search_linear_order_models(n_points);
    if (nodes_examined) *nodes_examined = result.nodes_examined;
    return result.model ? 0 : 1;
  });
}

hg_diagram *hg_diagram_parse(const char *spec) {
  return guarded<hg_diagram *>(nullptr, [&] {
    return new hg_diagram{hilbert::parse_diagram(spec ? spec : "")};
  });
}

char *hg_diagram_point(const hg_diagram *d, const char *field) {
  return guarded<char *>(nullptr, [&] {
    std::string name = field ? field : "";
    if (name == "0") name = "zero";
    const hilbert::RatPoint *p = nullptr;
    if (name == "A") p = &d->d.A;
    else if (name == "B") p = &d->d.B;
    else if (name == "C") p = &d->d.C;
    else if (name == "D") p = &d->d.D;
    else if (name == "zero") p = &d->d.zero;
    else if (name == "N") p = &d->d.N;
    else throw hilbert::diagram_error("unknown diagram point '" + name + "'");
    return dup_string(hilbert::to_string(*p));
  });
}

hg_diagram *hg_diagram_successor(const hg_diagram *d, char **d_prime) {
  return guarded<hg_diagram *>(nullptr, [&] {
    auto step = hilbert::successor(d->d);
    if (d_prime) *d_prime = dup_string(hilbert::to_string(step.d_prime));
    return new hg_diagram{step.output};
  });
}

int hg_diagram_verify_injective(const hg_diagram *d, int depth) {
  return guarded(-1, [&] { return hilbert::verify_injective(d->d, depth) ? 1 : 0; });
}

void hg_diagram_free(hg_diagram *d) { delete d; }

char *hg_order_points(const char *text) {
  return guarded<char *>(nullptr, [&] {
    std::vector<hilbert::RatPoint> points;
    std::istringstream in(text ? text : "");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      auto p = hilbert::parse_point(line);
      if (!p) throw hilbert::parse_error(lineno, "cannot parse point '" + line + "'");
      points.push_back(*p);
    }
    auto result = hilbert::order_collinear(points);
    std::string out;
    for (const auto &p : result.labels) out += hilbert::to_string(p) + "\n";
    return dup_string(out);
  });
}

char *hg_verify_plane(unsigned long long seed, int samples, int *failures) {
  return guarded<char *>(nullptr, [&] {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    auto suites = hilbert::run_plane_suites(seed, samples);
    std::string out;
    int total = 0;
    for (const auto &s : suites) {
      out += s.name + "," + std::to_string(s.samples) + "," + std::to_string(s.failures) + "\n";
      total += s.failures;
    }
    if (failures) *failures = total;
    return dup_string(out);
  });
}

}  // extern "C"
