#include "doctest.h"
#include "orbiklt/document.hpp"
#include "orbiklt/errors.hpp"

using namespace orbiklt;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("document values") {
  const auto d = parse_document(
      "# comment\n"
      "a = 3\n"
      "b = [1, -2, [3]]\n"
      "c = \"text\"\n"
      "flag = true\n"
      "m = [{x: 1, \"y\": 2}]\n");
  CHECK(d.root["a"] == 3);
  CHECK(d.root["b"][1] == -2);
  CHECK(d.root["b"][2][0] == 3);
  CHECK(d.root["c"] == "text");
  CHECK(d.root["flag"] == true);
  CHECK(d.root["m"][0]["y"] == 2);
  CHECK(d.where("b") == "line 3: b");
}

TEST_CASE("document errors carry positions") {
  CHECK(parse_error("a = 0.5\n").find("float literals are not accepted") != std::string::npos);
  CHECK(parse_error("a = 1\na = 2\n").find("line 2") != std::string::npos);
  CHECK(parse_error("a = [1, 2\n").find("line 2") != std::string::npos);
  CHECK(parse_error("a = {x 1}\n").find("expected ':'") != std::string::npos);
  CHECK(parse_error("= 1\n") != "");
  CHECK(parse_error("a = 1e5\n") != "");
}

TEST_CASE("graph documents") {
  const auto g = graph_from_document(parse_document(
      "vertices = [3, 2, 2]\nedges = [[0, 1], [1, 2]]\nbranches = [{vertex: 0, mult: 2}, {vertex: 2, mult: 4, inter: 1}]\n"));
  CHECK(g.size() == 3);
  CHECK(g.branches().size() == 2);
  CHECK(g.branches()[1].mult.value() == 4);
  CHECK_THROWS_AS(graph_from_document(parse_document("vertices = [2]\nedges = []\ncolour = 1\n")), ParseError);
  CHECK_THROWS_AS(graph_from_document(parse_document("edges = []\n")), ParseError);
  CHECK_THROWS_AS(graph_from_document(parse_document("vertices = [2, 2]\nedges = []\n")), ParseError);
  CHECK_THROWS_AS(graph_from_document(parse_document("vertices = [\"2\"]\n")), ParseError);
}

TEST_CASE("germ documents") {
  const auto g = germ_from_document(parse_document(
      "branches = [{kind: \"cusp\", p: 2, q: 3, mult: 2}, {kind: \"smooth\", mult: 2}]\ncontact = [[0, 1, 3]]\n"));
  CHECK(g.size() == 2);
  CHECK(g.contact(0, 1) == 3);
  CHECK_THROWS_AS(germ_from_document(parse_document("branches = [{kind: \"node\", mult: 2}]\n")), ParseError);
  CHECK_THROWS_AS(germ_from_document(parse_document("branches = [{kind: \"cusp\", mult: 2}]\n")), ParseError);
}

TEST_CASE("fibration documents") {
  const auto f = fibration_from_document(
      parse_document("baseGenus = 1\nfibers = [{point: \"c\", components: [[1, 3], [1, 1]]}]\n"));
  CHECK(f.base_genus == 1);
  CHECK(f.marked_fibers.at("c").components.size() == 2);
  CHECK_THROWS_AS(fibration_from_document(parse_document("baseGenus = 1\nfibers = [{point: \"c\"}]\n")), ParseError);
}
