#include <doctest.h>

#include <sstream>

#include <sfvs/errors.hpp>
#include <sfvs/generators.hpp>
#include <sfvs/instance_io.hpp>

#include "oracles.hpp"

using namespace sfvs;

TEST_CASE("parses a full instance") {
  const auto inst = parse_instance(
      "c triangle\n"
      "p sfvs 3 3\n"
      "e 1 2\ne 2 3\ne 1 3\n"
      "t 1\n"
      "w 2 3/2\n"
      "k 1/1\n");
  CHECK(inst.order() == 3);
  CHECK(inst.graph().size() == 3);
  CHECK(inst.terminals() == VertexSet(3, {0}));
  CHECK(inst.weight(1) == Rational(3, 2));
  CHECK(inst.weight(0) == Rational(1));
  REQUIRE(inst.threshold());
  CHECK(*inst.threshold() == Rational(1));
}

TEST_CASE("canonical form round trips") {
  sfvs::Rng rng(91);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = sfvs::testing::decorate(random_gnp(static_cast<int>(rng.uniform(0, 15)), 0.3, rng), rng, 0.3,
                                            rng.bernoulli(0.5));
    if (rng.bernoulli(0.3)) inst.set_threshold(Rational(rng.uniform(0, 9), rng.uniform(1, 3)));
    const std::string text = format_instance(inst);
    const Instance back = parse_instance(text);
    CHECK(back == inst);
    CHECK(format_instance(back) == text);
  }
}

TEST_CASE("canonical output sorts and omits unit weights") {
  const auto inst = parse_instance("p sfvs 3 2\ne 3 2\ne 2 1\nt 3\nt 1\nw 1 1/1\nw 2 4/2\n");
  CHECK(format_instance(inst) == "p sfvs 3 2\ne 1 2\ne 2 3\nt 1\nt 3\nw 2 2/1\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      (void)parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("p sfvs 2 1\ne 1 3\n") == 2);
  CHECK(line_of("p sfvs 2 2\ne 1 2\ne 2 1\n") == 3);
  CHECK(line_of("p sfvs 2 1\ne 1 2\nt 1\nt 1\n") == 4);
  CHECK(line_of("p sfvs 2 0\nw 1 0/1\n") == 2);
  CHECK(line_of("p sfvs 2 0\nw 1 -1/2\n") == 2);
  CHECK(line_of("e 1 2\n") == 1);
  CHECK(line_of("p sfvs 2 0\nx\n") == 2);
  CHECK(line_of("p sfvs 2 0\nk 1\nk 2\n") == 3);
  CHECK(line_of("p sfvs 2 0\ne 1 1\n") == 2);
  CHECK(line_of("p sfvs 3 2\ne 1 2\n") > 0);  // too few edges
  CHECK(line_of("") > 0);
}

TEST_CASE("stream reader matches string parser") {
  std::istringstream in("p sfvs 2 1\ne 1 2\nt 2\n");
  const auto a = read_instance(in);
  CHECK(a == parse_instance("p sfvs 2 1\ne 1 2\nt 2\n"));
  std::ostringstream out;
  write_instance(out, a);
  CHECK(out.str() == format_instance(a));
}
