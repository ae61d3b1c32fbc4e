#include <doctest.h>

#include "fockgauss/config.hpp"

using namespace fockgauss;

TEST_CASE("well-formed configuration") {
  const Config c = parse_config(
      "# comment line\n"
      "n = 2\n"
      "degree=6   # trailing comment\n"
      "\n"
      "order=2\nquad_points=24\ntolerance=1e-7\nseed=18446744073709551615\n"
      "symbol=\"exp(-i*x1) # not a comment\"\n");
  CHECK(c.n == 2u);
  CHECK(c.degree == 6u);
  CHECK(c.order == 2u);
  CHECK(c.quad_points == 24u);
  CHECK(*c.tolerance == doctest::Approx(1e-7));
  CHECK(c.seed == 18446744073709551615ull);
  CHECK(c.symbol == std::string("exp(-i*x1) # not a comment"));
  CHECK(c.raw.at("degree") == "6");
  CHECK_FALSE(parse_config("").n.has_value());
}

TEST_CASE("malformed configurations are rejected") {
  for (const char* bad : {"colour=red", "n=2\nn=1", "degree=six", "degree=-1", "tolerance=0", "tolerance=-1e-3",
                          "n=0", "n=5", "quad_points=0", "symbol=\"sin(x1)", "just a line", "seed=1.5", "=3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_config(bad), ConfigError);
  }
  CHECK_THROWS_AS(load_config("/nonexistent/fockgauss.cfg"), ConfigError);
}
