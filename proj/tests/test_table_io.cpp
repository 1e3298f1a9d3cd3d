#include <doctest.h>

#include <random>
#include <sstream>

#include "semirank/errors.hpp"
#include "semirank/families.hpp"
#include "semirank/table_io.hpp"

using namespace semirank;

namespace {

FiniteSemigroup parse(std::string const& text, Trust trust = Trust::checked) {
  std::istringstream in(text);
  return read_table(in, trust);
}

}  // namespace

TEST_CASE("canonical text of B_2") {
  auto const b2 = brandt(cyclic_group(1), 2).semigroup;
  CHECK(to_table_text(b2) ==
        "semigroup 5\n"
        "0 1 4 4 4\n"
        "4 4 0 1 4\n"
        "2 3 4 4 4\n"
        "4 4 2 3 4\n"
        "4 4 4 4 4\n"
        "labels\n"
        "(1,e,1)\n(1,e,2)\n(2,e,1)\n(2,e,2)\n0\n");
}

TEST_CASE("write then read reproduces canonical files byte for byte") {
  std::vector<FiniteSemigroup> cases;
  for (auto const& named : small_corpus()) cases.push_back(named.semigroup);
  cases.push_back(order_preserving_singular(4).semigroup);
  cases.push_back(brandt(symmetric_group(3), 2).semigroup);
  for (auto const& s : cases) {
    auto const text = to_table_text(s);
    auto const back = parse(text);
    CHECK(to_table_text(back) == text);
    CHECK(std::equal(back.table().begin(), back.table().end(), s.table().begin()));
    CHECK(back.labels() == s.labels());
  }
}

TEST_CASE("reader accepts loose whitespace and no labels") {
  auto const s = parse("semigroup 2\n 0\t1 \r\n1 0\n\n");
  CHECK(s.order() == 2);
  CHECK_FALSE(s.has_labels());
  CHECK(s(1, 1) == 0);
}

TEST_CASE("reader errors") {
  CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty"), TableError);
  CHECK_THROWS_WITH_AS(parse("group 2\n"), doctest::Contains("line 1"), TableError);
  CHECK_THROWS_AS(parse("semigroup 0\n"), TableError);
  CHECK_THROWS_AS(parse("semigroup x\n"), TableError);
  CHECK_THROWS_WITH_AS(parse("semigroup 2\n0 1\n"), doctest::Contains("missing table row"),
                       TableError);
  CHECK_THROWS_WITH_AS(parse("semigroup 2\n0 1 1\n1 0\n"), doctest::Contains("line 2"),
                       TableError);
  CHECK_THROWS_WITH_AS(parse("semigroup 2\n0 1\n1 2\n"), doctest::Contains("row 1, column 1"),
                       TableError);
  CHECK_THROWS_AS(parse("semigroup 2\n0 -1\n1 0\n"), TableError);
  CHECK_THROWS_WITH_AS(parse("semigroup 2\n0 1\n1 0\nlabels\ne\n"),
                       doctest::Contains("missing label"), TableError);
  CHECK_THROWS_AS(parse("semigroup 2\n0 1\n1 0\nlabels\ne\ne\n"), TableError);
  CHECK_THROWS_AS(parse("semigroup 2\n0 1\n1 0\nstuff\n"), TableError);
  CHECK_THROWS_AS(parse("semigroup 2\n0 1\n1 0\nlabels\na\nb\nc\n"), TableError);
  CHECK_THROWS_AS(read_table_file("/nonexistent/table.txt"), TableError);
}

TEST_CASE("associativity is enforced unless trusted") {
  std::string const bad = "semigroup 2\n1 1\n0 0\n";
  CHECK_THROWS_WITH_AS(parse(bad), doctest::Contains("(0, 0, 0)"), TableError);
  CHECK(parse(bad, Trust::trusted).order() == 2);
}
