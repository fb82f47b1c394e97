#include "hilbert/successor.hpp"

#include <map>
#include <sstream>

namespace hilbert {

Diagram make_diagram(const RatPoint &A, const RatPoint &B, const RatPoint &C,
                     const RatPoint &D, const RatPoint &zero, const RatPoint &N) {
  if (collinear(A, B, zero)) throw diagram_error("A, B and 0 are collinear");
  if (!between(A, B, C)) throw diagram_error("B does not lie between A and C");
  if (!between(C, zero, D)) throw diagram_error("0 does not lie between C and D");
  if (N != zero && !between(A, N, zero))
    throw diagram_error("N neither equals 0 nor lies between A and 0");
  return Diagram{A, B, C, D, zero, N};
}

SuccessorStep successor(const Diagram &d) {
  auto meet = [](const RatLine &l1, const RatLine &l2, const char *what) {
    auto p = intersect(l1, l2);
    if (!p) throw internal_consistency_error(std::string("successor: ") + what +
                                             " are parallel or identical");
    return *p;
  };
  RatPoint d_prime = meet(line_through(d.C, d.N), line_through(d.A, d.D), "CN and AD");
  RatPoint s = meet(line_through(d.B, d_prime), line_through(d.A, d.zero), "BD' and A0");

  bool ok = collinear(d.C, d_prime, d.N) && collinear(d.B, d_prime, s) &&
            collinear(d.A, d.D, d_prime) && between(d.A, s, d.zero) &&
            (d.N == d.zero || between(d.A, s, d.N));
  if (!ok) throw internal_consistency_error("successor: step invariants failed");

  Diagram out = d;
  out.N = s;
  // re-validate the full configuration; only N changed
  make_diagram(out.A, out.B, out.C, out.D, out.zero, out.N);
  return SuccessorStep{d, d_prime, out};
}

RatPoint nat_point(const Diagram &d, int n) {
  if (d.N != d.zero)
    throw diagram_error("nat_point requires a fresh diagram (N = 0)");
  Diagram cur = d;
  for (int i = 0; i < n; ++i) cur = successor(cur).output;
  return cur.N;
}

bool verify_injective(const Diagram &d, int n) {
  if (d.N != d.zero)
    throw diagram_error("verify_injective requires a fresh diagram (N = 0)");
  std::vector<RatPoint> orbit{d.zero};
  Diagram cur = d;
  for (int i = 1; i <= n; ++i) {
    cur = successor(cur).output;
    orbit.push_back(cur.N);
  }
  for (std::size_t j = 1; j < orbit.size(); ++j) {
    if (orbit[j] == d.zero) return false;  // onto zero: must never happen
    for (std::size_t i = 0; i < j; ++i) {
      if (orbit[i] == orbit[j]) return false;
      if (!between(d.A, orbit[j], orbit[i])) return false;
    }
  }
  return true;
}

Diagram parse_diagram(const std::string &spec) {
  std::map<std::string, RatPoint> fields;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw diagram_error("diagram spec item '" + item + "' is not of the form name=(x,y)");
    std::string key = item.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key == "0") key = "zero";
    auto p = parse_point(item.substr(eq + 1));
    if (!p) throw diagram_error("cannot parse point for '" + key + "' in diagram spec");
    if (!fields.emplace(key, *p).second)
      throw diagram_error("duplicate point '" + key + "' in diagram spec");
  }
  for (const char *required : {"A", "B", "C", "D", "zero"})
    if (!fields.count(required))
      throw diagram_error(std::string("diagram spec is missing point '") + required + "'");
  for (const auto &[key, value] : fields)
    if (key != "A" && key != "B" && key != "C" && key != "D" && key != "zero" && key != "N")
      throw diagram_error("unknown point '" + key + "' in diagram spec");
  RatPoint n = fields.count("N") ? fields.at("N") : fields.at("zero");
  return make_diagram(fields.at("A"), fields.at("B"), fields.at("C"), fields.at("D"),
                      fields.at("zero"), n);
}

}  // namespace hilbert
