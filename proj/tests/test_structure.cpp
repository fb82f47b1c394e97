#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hilbert/structure.hpp"

using namespace hilbert;

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteIncidenceStructure random_structure(std::mt19937_64 &rng) {
  FiniteIncidenceStructure s;
  std::uniform_int_distribution<int> count(0, 4);
  int np = count(rng), nl = count(rng), nq = count(rng);
  for (int i = 0; i < np; ++i) s.points.push_back("p" + std::to_string(i));
  for (int i = 0; i < nl; ++i) s.lines.push_back("l" + std::to_string(i));
  for (int i = 0; i < nq; ++i) s.planes.push_back("q" + std::to_string(i));
  std::bernoulli_distribution flip(0.4);
  for (const auto &p : s.points) {
    for (const auto &l : s.lines)
      if (flip(rng)) s.on_line.insert({p, l});
    for (const auto &q : s.planes)
      if (flip(rng)) s.on_plane.insert({p, q});
  }
  return s;
}

}  // namespace

TEST_CASE("tetrahedron matches the minimal 14-object model") {
  auto s = tetrahedron();
  CHECK(s.object_count() == 14);
  CHECK(s.points.size() == 4);
  CHECK(s.lines.size() == 6);
  CHECK(s.planes.size() == 4);
  CHECK(s.on_line.count({"A", "a"}) == 1);
  CHECK(s.on_line.count({"B", "a"}) == 1);
  CHECK(s.on_plane.count({"B", "delta"}) == 1);
  CHECK(s.on_plane.count({"C", "delta"}) == 1);
  CHECK(s.on_plane.count({"D", "delta"}) == 1);
  CHECK(s.on_line.size() == 12);
  CHECK(s.on_plane.size() == 12);
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("bundled model file parses to tetrahedron()") {
  auto parsed = parse_model(read_file(std::string(DATA_DIR) + "/tetrahedron.model"));
  CHECK(parsed == tetrahedron());
}

TEST_CASE("serialize is canonical and round-trips") {
  auto s = tetrahedron();
  std::string text = serialize_model(s);
  CHECK(text.find("points: A B C D\n") != std::string::npos);
  CHECK(text.find("lines: a b c d e f\n") != std::string::npos);
  CHECK(parse_model(text) == s);

  FiniteIncidenceStructure empty;
  CHECK(serialize_model(empty) == "points:\nlines:\nplanes:\n");

  // structural equality implies byte equality (incidence sets are ordered)
  FiniteIncidenceStructure t = tetrahedron();
  CHECK(serialize_model(t) == text);
}

TEST_CASE("round-trip holds for 100 random structures") {
  std::mt19937_64 rng(424242);
  for (int i = 0; i < 100; ++i) {
    auto s = random_structure(rng);
    CHECK(parse_model(serialize_model(s)) == s);
  }
}

TEST_CASE("parse_model rejects malformed input") {
  CHECK_THROWS_AS(parse_model("points: A\nlines: a\nplanes:\non_line: X a\n"), parse_error);
  CHECK_THROWS_AS(parse_model("points: A\npoints: B\n"), parse_error);
  CHECK_THROWS_AS(parse_model("frobnicate: A\n"), parse_error);
  CHECK_THROWS_AS(parse_model("on_line: A a\npoints: A\nlines: a\n"), parse_error);
  CHECK_THROWS_AS(parse_model("points: A A\nlines:\nplanes:\n"), parse_error);
  CHECK_THROWS_AS(parse_model("points: A\nlines:\nplanes:\non_line: A\n"), parse_error);

  // the dangling-reference message names the offender
  try {
    parse_model("points: A\nlines: a\nplanes:\non_line: X a\n");
    FAIL("expected parse_error");
  } catch (const parse_error &e) {
    CHECK(std::string(e.what()).find("X") != std::string::npos);
  }
}

TEST_CASE("empty input is the empty structure") {
  auto s = parse_model("");
  CHECK(s == FiniteIncidenceStructure{});
  CHECK(parse_model("# only a comment\n\n") == s);
}

TEST_CASE("comments and blank lines are ignored") {
  auto s = parse_model("# header\npoints: A B # trailing\nlines: a\nplanes:\n\non_line: A a\n");
  CHECK(s.points == std::vector<std::string>{"A", "B"});
  CHECK(s.on_line.count({"A", "a"}) == 1);
}
