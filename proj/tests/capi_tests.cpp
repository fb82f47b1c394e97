// Exercises the extern-C surface the way an FFI consumer would: through
// the installed header only, no C++ core types.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "hilbert/hilbert_c.h"

TEST_CASE("model parse/serialize round trip") {
  hg_model *t = hg_model_tetrahedron();
  REQUIRE(t);
  char *text = hg_model_serialize(t);
  REQUIRE(text);
  hg_model *parsed = hg_model_parse(text);
  REQUIRE(parsed);
  CHECK(hg_model_isomorphic(t, parsed) == 1);
  char *text2 = hg_model_serialize(parsed);
  CHECK(std::string(text) == text2);
  hg_string_free(text);
  hg_string_free(text2);
  hg_model_free(parsed);
  hg_model_free(t);
}

TEST_CASE("parse errors set status and message") {
  hg_model *m = hg_model_parse("points: A\nlines: a\nplanes:\non_line: X a\n");
  CHECK(m == nullptr);
  CHECK(hg_last_status() == HG_ERR_PARSE);
  CHECK(std::string(hg_last_error()).find("X") != std::string::npos);
}

TEST_CASE("group I reports over the C API") {
  hg_model *t = hg_model_tetrahedron();
  hg_reports *r = hg_check_group_i(t);
  REQUIRE(r);
  REQUIRE(hg_reports_count(r) == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(hg_reports_verdict(r, i) == HG_HOLDS);
    CHECK(hg_reports_witness(r, i) == nullptr);
  }
  CHECK(std::string(hg_reports_axiom(r, 0)) == "I,1");
  CHECK(std::string(hg_reports_axiom(r, 7)) == "I,8");
  hg_reports_free(r);
  hg_model_free(t);
}

TEST_CASE("group II linear reports over the C API") {
  hg_reports *r = hg_check_group_ii_linear(
      "points: A B C\nbetween: A B C\nbetween: C B A\n");
  REQUIRE(r);
  REQUIRE(hg_reports_count(r) == 3);
  CHECK(hg_reports_verdict(r, 0) == HG_HOLDS);   // II,1
  CHECK(hg_reports_verdict(r, 1) == HG_FAILS);   // II,2
  CHECK(hg_reports_verdict(r, 2) == HG_HOLDS);   // II,3
  CHECK(std::string(hg_reports_witness(r, 1)) == "A C");
  hg_reports_free(r);
}

TEST_CASE("bounded model search over the C API") {
  hg_search *unsat = hg_find_min_model(3, 6, 4);
  REQUIRE(unsat);
  CHECK(hg_search_satisfiable(unsat) == 0);
  CHECK(hg_search_model_count(unsat) == 0);
  hg_search_free(unsat);

  hg_search *sat = hg_find_min_model(4, 6, 4);
  REQUIRE(sat);
  CHECK(hg_search_satisfiable(sat) == 1);
  REQUIRE(hg_search_model_count(sat) == 1);
  CHECK(hg_search_examined(sat) > 0);
  CHECK(hg_search_elapsed_seconds(sat) >= 0.0);
  hg_model *m = hg_search_model(sat, 0);
  hg_model *t = hg_model_tetrahedron();
  CHECK(hg_model_isomorphic(m, t) == 1);
  hg_model_free(m);
  hg_model_free(t);
  hg_search_free(sat);

  CHECK(hg_find_min_model(9, 1, 1) == nullptr);
  CHECK(hg_last_status() == HG_ERR_INVALID);
}

TEST_CASE("linear order search over the C API") {
  unsigned long long nodes = 0;
  CHECK(hg_no_linear_order_model(3, &nodes) == 1);
  CHECK(nodes > 0);
  CHECK(hg_no_linear_order_model(4, nullptr) == 1);
  CHECK(hg_no_linear_order_model(7, nullptr) == -1);
}

TEST_CASE("diagram stepping over the C API") {
  hg_diagram *d =
      hg_diagram_parse("A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)");
  REQUIRE(d);
  char *n0 = hg_diagram_point(d, "N");
  CHECK(std::string(n0) == "(1,0)");
  hg_string_free(n0);

  char *d_prime = nullptr;
  hg_diagram *next = hg_diagram_successor(d, &d_prime);
  REQUIRE(next);
  CHECK(std::string(d_prime) == "(0,-2)");
  hg_string_free(d_prime);
  char *n1 = hg_diagram_point(next, "N");
  CHECK(std::string(n1) == "(2/3,0)");
  hg_string_free(n1);

  CHECK(hg_diagram_verify_injective(d, 20) == 1);
  CHECK(hg_diagram_verify_injective(next, 5) == -1);  // not a fresh diagram
  CHECK(hg_last_status() == HG_ERR_INVALID);

  hg_diagram_free(next);
  hg_diagram_free(d);

  CHECK(hg_diagram_parse("A=(0,0);B=(1,0);C=(2,2);D=(0,-2);zero=(1,0)") == nullptr);
  CHECK(hg_last_status() == HG_ERR_INVALID);
  CHECK(std::string(hg_last_error()).find("collinear") != std::string::npos);
}

TEST_CASE("point ordering over the C API") {
  char *out = hg_order_points("(3,0)\n(1,0)\n# comment\n(2,0)\n(0,0)\n");
  REQUIRE(out);
  CHECK(std::string(out) == "(3,0)\n(2,0)\n(1,0)\n(0,0)\n");
  hg_string_free(out);

  CHECK(hg_order_points("(0,0)\n(1,0)\n(1,1)\n") == nullptr);
  CHECK(hg_last_status() == HG_ERR_INVALID);
  CHECK(hg_order_points("(0,0)\nnot-a-point\n") == nullptr);
  CHECK(hg_last_status() == HG_ERR_PARSE);
}

TEST_CASE("plane property suites over the C API") {
  int failures = -1;
  char *csv = hg_verify_plane(1899, 100, &failures);
  REQUIRE(csv);
  CHECK(failures == 0);
  std::string s(csv);
  CHECK(s.find("II,4 Pasch crossing,100,0") != std::string::npos);
  hg_string_free(csv);

  CHECK(hg_verify_plane(1899, 0, nullptr) == nullptr);
  CHECK(hg_last_status() == HG_ERR_INVALID);
}
