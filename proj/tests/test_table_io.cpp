#include <cmath>
#include <random>

#include "doctest.h"
#include "lowzero/errors.hpp"
#include "lowzero/table_io.hpp"

using namespace lowzero;

TEST_CASE("csv round trip keeps seven significant digits") {
  std::mt19937 rng(0);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-12, 12);
  Table t;
  t.columns = {"a", "b", "c"};
  for (int i = 0; i < 200; ++i)
    t.rows.push_back({mant(rng) * std::pow(10.0, expo(rng)),
                      mant(rng), std::fabs(mant(rng)) + 1e-3});
  const Table back = parse_csv(to_csv(t));
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      const double x = t.rows[r][c], y = back.rows[r][c];
      if (x == 0.0)
        CHECK(y == 0.0);
      else
        CHECK(std::fabs(x - y) / std::fabs(x) < 1e-6);
    }
}

TEST_CASE("csv reader skips comment headers") {
  const Table t = parse_csv("# q=4 tf=triangle\nx,y\n1,2\n");
  REQUIRE(t.columns.size() == 2);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][1] == 2.0);
}

TEST_CASE("csv and json shapes") {
  Table t;
  t.columns = {"beta", "value"};
  t.rows = {{1.0, 0.5}, {2.0, 0.25}};
  const std::string csv = to_csv(t);
  CHECK(csv.rfind("beta,value\n", 0) == 0);
  const std::string js = to_json(t);
  CHECK(js.find("\"beta\"") != std::string::npos);
  CHECK(js.find('[') == 0);
  Table ragged;
  ragged.columns = {"x"};
  ragged.rows = {{1.0, 2.0}};
  CHECK_THROWS_AS(to_csv(ragged), domain_error);
}
