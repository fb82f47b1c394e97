// Command-line front end over the hilbertgeo C API.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "hilbert/hilbert_c.h"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitNegative = 1;  // axiom fails / unsatisfiable / suite failure
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

constexpr unsigned long long kDefaultSeed = 1899;

struct StringDeleter {
  void operator()(char *s) const { hg_string_free(s); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

int fail_from_status(const std::string &context) {
  std::cerr << context << ": " << hg_last_error() << "\n";
  return hg_last_status() == HG_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

bool read_file(const std::string &path, std::string &out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_output(const std::string &path, const std::string &content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return true;
}

const char *verdict_name(int v) {
  switch (v) {
    case HG_HOLDS: return "holds";
    case HG_FAILS: return "fails";
    case HG_VACUOUS: return "vacuous";
  }
  return "?";
}

int print_reports(hg_reports *reports, const std::string &out_path) {
  std::ostringstream os;
  bool any_fails = false;
  for (int i = 0; i < hg_reports_count(reports); ++i) {
    int v = hg_reports_verdict(reports, i);
    os << hg_reports_axiom(reports, i) << ": " << verdict_name(v);
    if (v == HG_FAILS) {
      any_fails = true;
      const char *w = hg_reports_witness(reports, i);
      if (w && *w) os << " (witness: " << w << ")";
    }
    os << "\n";
  }
  hg_reports_free(reports);
  if (!write_output(out_path, os.str())) {
    std::cerr << "cannot write output file\n";
    return kExitUsage;
  }
  return any_fails ? kExitNegative : kExitHolds;
}

int cmd_check_model(const std::string &file, const std::string &group,
                    const std::string &out_path) {
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "cannot read '" << file << "'\n";
    return kExitUsage;
  }
  hg_reports *reports = nullptr;
  if (group == "I") {
    hg_model *m = hg_model_parse(text.c_str());
    if (!m) return fail_from_status(file);
    reports = hg_check_group_i(m);
    hg_model_free(m);
  } else {
    reports = hg_check_group_ii_linear(text.c_str());
  }
  if (!reports) return fail_from_status(file);
  return print_reports(reports, out_path);
}

int cmd_find_min_model(int max_points, int max_lines, int max_planes,
                       const std::string &out_path) {
  hg_search *search = hg_find_min_model(max_points, max_lines, max_planes);
  if (!search) return fail_from_status("find-min-model");
  std::ostringstream os;
  bool sat = hg_search_satisfiable(search) != 0;
  os << "satisfiable: " << (sat ? "yes" : "no") << "\n";
  os << "structures examined: " << hg_search_examined(search) << "\n";
  os << "elapsed seconds: " << hg_search_elapsed_seconds(search) << "\n";
  for (int i = 0; i < hg_search_model_count(search); ++i) {
    hg_model *m = hg_search_model(search, i);
    CStr text(hg_model_serialize(m));
    os << "minimal model " << i + 1 << ":\n" << text.get();
    hg_model_free(m);
  }
  hg_search_free(search);
  if (!write_output(out_path, os.str())) {
    std::cerr << "cannot write output file\n";
    return kExitUsage;
  }
  return sat ? kExitHolds : kExitNegative;
}

int cmd_verify_plane(unsigned long long seed, int samples, const std::string &out_path) {
  int failures = 0;
  CStr csv(hg_verify_plane(seed, samples, &failures));
  if (!csv) return fail_from_status("verify-plane");
  std::ostringstream os;
  os << "suite,samples,failures\n" << csv.get();
  os << "total failures: " << failures << "\n";
  if (!write_output(out_path, os.str())) {
    std::cerr << "cannot write output file\n";
    return kExitUsage;
  }
  return failures == 0 ? kExitHolds : kExitNegative;
}

int cmd_order_points(const std::string &file, const std::string &out_path) {
  std::string text;
  if (!read_file(file, text)) {
    std::cerr << "cannot read '" << file << "'\n";
    return kExitUsage;
  }
  CStr ordered(hg_order_points(text.c_str()));
  if (!ordered) return fail_from_status(file);
  if (!write_output(out_path, ordered.get())) {
    std::cerr << "cannot write output file\n";
    return kExitUsage;
  }
  return kExitHolds;
}

// "p/q" -> double, render-time only; computation stays exact in the core
double rational_to_double(const std::string &s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return std::stod(s);
  return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

struct XY {
  double x = 0, y = 0;
};

XY parse_xy(const std::string &point) {
  auto comma = point.find(',');
  return XY{rational_to_double(point.substr(1, comma - 1)),
            rational_to_double(point.substr(comma + 1, point.size() - comma - 2))};
}

std::string point_of(const hg_diagram *d, const char *field) {
  CStr s(hg_diagram_point(d, field));
  return s ? s.get() : "";
}

std::string render_svg(const hg_diagram *d, const std::string &d_prime, int step) {
  struct Named {
    const char *label;
    XY at;
  };
  std::vector<Named> pts;
  for (const char *f : {"A", "B", "C", "D", "zero", "N"})
    pts.push_back({f, parse_xy(point_of(d, f))});
  if (!d_prime.empty()) pts.push_back({"D'", parse_xy(d_prime)});

  double minx = pts[0].at.x, maxx = minx, miny = pts[0].at.y, maxy = miny;
  for (const auto &p : pts) {
    minx = std::min(minx, p.at.x);
    maxx = std::max(maxx, p.at.x);
    miny = std::min(miny, p.at.y);
    maxy = std::max(maxy, p.at.y);
  }
  double pad = std::max({maxx - minx, maxy - miny, 1.0}) * 0.15;
  minx -= pad, maxx += pad, miny -= pad, maxy += pad;
  double w = maxx - minx, h = maxy - miny, scale = 400.0 / std::max(w, h);
  auto sx = [&](double x) { return (x - minx) * scale; };
  auto sy = [&](double y) { return (maxy - y) * scale; };  // flip y for screen coords

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
     << h * scale << "\">\n";
  os << "<!-- successor diagram, step " << step << " -->\n";
  auto seg = [&](const XY &a, const XY &b, const char *color) {
    os << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
       << "\" y2=\"" << sy(b.y) << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
  };
  auto find = [&](const char *label) {
    for (const auto &p : pts)
      if (std::string(p.label) == label) return p.at;
    return XY{};
  };
  seg(find("A"), find("C"), "black");     // carries B
  seg(find("C"), find("D"), "black");     // carries zero
  seg(find("A"), find("zero"), "black");  // carries N
  seg(find("A"), find("D"), "gray");
  if (!d_prime.empty()) {
    seg(find("C"), find("N"), "steelblue");
    seg(find("B"), find("D'"), "firebrick");
  }
  for (const auto &p : pts) {
    os << "<circle cx=\"" << sx(p.at.x) << "\" cy=\"" << sy(p.at.y)
       << "\" r=\"3\" fill=\"black\"/>\n";
    os << "<text x=\"" << sx(p.at.x) + 5 << "\" y=\"" << sy(p.at.y) - 5 << "\" font-size=\"12\">"
       << (std::string(p.label) == "zero" ? "0" : p.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int cmd_successor_trace(const std::string &diagram_spec, int steps, const std::string &format,
                        const std::string &out_path) {
  hg_diagram *d = hg_diagram_parse(diagram_spec.c_str());
  if (!d) return fail_from_status("successor-trace");

  std::ostringstream os;
  bool svg = format == "svg";
  if (format == "csv") os << "n,x,y\n";
  for (int n = 0;; ++n) {
    std::string npt = point_of(d, "N");
    if (format == "csv") {
      auto comma = npt.find(',');
      os << n << "," << npt.substr(1, comma - 1) << ","
         << npt.substr(comma + 1, npt.size() - comma - 2) << "\n";
    } else if (format == "text") {
      os << "step " << n << ": N = " << npt << "\n";
    }
    if (svg) {
      std::string body = render_svg(d, "", n);
      std::string path = out_path.empty() ? ("successor-step-" + std::to_string(n) + ".svg")
                                          : (out_path + "-" + std::to_string(n) + ".svg");
      if (!write_output(path, body)) {
        std::cerr << "cannot write '" << path << "'\n";
        hg_diagram_free(d);
        return kExitUsage;
      }
    }
    if (n == steps) break;
    char *d_prime = nullptr;
    hg_diagram *next = hg_diagram_successor(d, &d_prime);
    if (!next) {
      int code = fail_from_status("successor-trace");
      hg_diagram_free(d);
      return code == kExitUsage ? kExitInternal : code;  // mid-trace failures are internal
    }
    hg_string_free(d_prime);
    hg_diagram_free(d);
    d = next;
  }
  hg_diagram_free(d);
  if (!svg && !write_output(out_path, os.str())) {
    std::cerr << "cannot write output file\n";
    return kExitUsage;
  }
  return kExitHolds;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite and exact-rational mechanization of Hilbert's Groups I and II:\n"
               "incidence model checking, minimal model search, order axiom\n"
               "verification, and the geometric successor function."};
  app.require_subcommand(1);

  std::string file, group = "I", out_path, diagram_spec, format = "text";
  int max_points = 4, max_lines = 6, max_planes = 4;
  int steps = 0, samples = 1000;
  unsigned long long seed = kDefaultSeed;

  auto *check = app.add_subcommand("check-model", "Check Group I (or linear Group II) axioms "
                                                  "against a finite model file");
  check->add_option("--file", file, "model file")->required();
  check->add_option("--group", group, "axiom group: I or II-linear")
      ->check(CLI::IsMember({"I", "II-linear"}));
  check->add_option("--out", out_path, "write report here instead of stdout");

  auto *findmin = app.add_subcommand("find-min-model",
                                     "Exhaustively search for Group I models within bounds");
  findmin->add_option("--max-points", max_points, "point bound (cap 5)");
  findmin->add_option("--max-lines", max_lines, "line bound (cap 8)");
  findmin->add_option("--max-planes", max_planes, "plane bound (cap 6)");
  findmin->add_option("--out", out_path, "write report here instead of stdout");

  auto *verify = app.add_subcommand("verify-plane",
                                    "Run the Group II property suites in the rational plane");
  verify->add_option("--seed", seed, "RNG seed (default 1899)");
  verify->add_option("--samples", samples, "samples per suite")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "write summary here instead of stdout");

  auto *trace = app.add_subcommand("successor-trace",
                                   "Iterate the geometric successor function on a diagram");
  trace->add_option("--diagram", diagram_spec,
                    "seed diagram, e.g. \"A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)\"")
      ->required();
  trace->add_option("--steps", steps, "number of successor applications")
      ->check(CLI::NonNegativeNumber);
  trace->add_option("--format", format, "text, csv or svg")
      ->check(CLI::IsMember({"text", "csv", "svg"}));
  trace->add_option("--out", out_path, "output path (svg: used as filename prefix)");

  auto *order = app.add_subcommand("order-points",
                                   "Order collinear points by betweenness alone");
  order->add_option("--file", file, "point list file, one (x,y) per line")->required();
  order->add_option("--out", out_path, "write ordering here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (check->parsed()) return cmd_check_model(file, group, out_path);
  if (findmin->parsed()) return cmd_find_min_model(max_points, max_lines, max_planes, out_path);
  if (verify->parsed()) return cmd_verify_plane(seed, samples, out_path);
  if (trace->parsed()) return cmd_successor_trace(diagram_spec, steps, format, out_path);
  if (order->parsed()) return cmd_order_points(file, out_path);
  return kExitUsage;
}
