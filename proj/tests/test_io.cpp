#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "smf/io.hpp"

using namespace smf;

namespace {

SymMatQ symq2(const Rational& a, const Rational& b, const Rational& d) {
  SymMatQ t(2);
  t.set(0, 0, a);
  t.set(0, 1, b);
  t.set(1, 1, d);
  return t;
}

}  // namespace

TEST_CASE("format_real round-trips the full mantissa") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> base(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const Real x = static_cast<Real>(base(rng)) * std::pow(10.0L, Real(expo(rng) / 10));
    CHECK(parse_real(format_real(x)) == x);
  }
  CHECK(parse_real(format_real(0.0L)) == 0.0L);
  CHECK(parse_real("1/3") == to_real<Real>(Rational(1, 3)));
  CHECK(parse_real("2.5e3") == 2500.0L);
  CHECK_THROWS_AS(parse_real(""), Error);
  CHECK_THROWS_AS(parse_real("1.5junk"), Error);
  CHECK_THROWS_AS(parse_real("nan"), Error);
}

TEST_CASE("matrix literals round-trip and validate") {
  const SymMatQ t = symq2(1, Rational(1, 2), 3);
  const Json j = symmat_to_json(t);
  CHECK(j.dump() == R"([["1","1/2"],["1/2","3"]])");
  CHECK(symmat_from_json(j) == t);

  RatMat m(2, 3);
  for (Eigen::Index i = 0; i < 2; ++i) {
    for (Eigen::Index k = 0; k < 3; ++k) m(i, k) = Rational(int(3 * i + k), 7);
  }
  CHECK(matrix_from_json(matrix_to_json(m)) == m);

  CHECK_THROWS_AS(matrix_from_json(Json::array()), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), Error);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([[1,2]])")), Error);
  // Asymmetric input is rejected by the symmetric wrapper.
  CHECK_THROWS(symmat_from_json(Json::parse(R"([["1","2"],["3","4"]])")));
}

TEST_CASE("half-space points round-trip") {
  const HalfSpacePointQ z(symq2(0, Rational(-1, 3), 2), symq2(2, Rational(1, 2), 1));
  const Json j = point_to_json(z);
  const HalfSpacePointQ back = point_from_json(j);
  CHECK(back.real_part() == z.real_part());
  CHECK(back.imag_part() == z.imag_part());

  // Indefinite imaginary part is rejected at construction.
  Json bad = j;
  bad["Y"] = symmat_to_json(symq2(1, 2, 1));
  CHECK_THROWS(point_from_json(bad));
}

TEST_CASE("coefficient tables round-trip through JSON lines") {
  CoeffTable table;
  table.n = 2;
  table.ell = Rational(11, 2);
  table.m = 3;
  table.sign_character = -1;
  table.entries.emplace(symq2(1, Rational(1, 6), 1), Cplx(1.25L, -0.5L));
  table.entries.emplace(symq2(1, Rational(1, 3), 2), Cplx(-2.0L, 1e-17L));

  std::stringstream buffer;
  write_coeff_table(buffer, table);
  const CoeffTable back = read_coeff_table(buffer);
  CHECK(back.n == table.n);
  CHECK(back.ell == table.ell);
  CHECK(back.m == table.m);
  CHECK(back.sign_character == table.sign_character);
  REQUIRE(back.entries.size() == table.entries.size());
  for (const auto& [key, value] : table.entries) {
    const auto it = back.entries.find(key);
    REQUIRE(it != back.entries.end());
    CHECK(it->second == value);
  }

  // Two writes are byte-identical.
  std::stringstream again;
  write_coeff_table(again, back);
  std::stringstream original;
  write_coeff_table(original, table);
  CHECK(again.str() == original.str());
}

TEST_CASE("coefficient table reader rejects malformed input") {
  std::stringstream missing_header(R"({"T": [["1"]], "a_re": "1", "a_im": "0"})");
  CHECK_THROWS_AS(read_coeff_table(missing_header), Error);

  std::stringstream empty("\n  \n");
  CHECK_THROWS_AS(read_coeff_table(empty), Error);

  std::stringstream bad_dim;
  bad_dim << R"({"M": "1", "convention": 1, "ell": "12", "n": 1})" << "\n"
          << R"({"T": [["1","0"],["0","1"]], "a_re": "1", "a_im": "0"})" << "\n";
  CHECK_THROWS_AS(read_coeff_table(bad_dim), Error);

  std::stringstream dup;
  dup << R"({"M": "1", "convention": 1, "ell": "12", "n": 1})" << "\n"
      << R"({"T": [["2"]], "a_re": "1", "a_im": "0"})" << "\n"
      << R"({"T": [["2"]], "a_re": "3", "a_im": "0"})" << "\n";
  CHECK_THROWS_AS(read_coeff_table(dup), Error);

  std::stringstream junk;
  junk << R"({"M": "1", "convention": 1, "ell": "12", "n": 1})" << "\n"
       << "not json" << "\n";
  CHECK_THROWS_AS(read_coeff_table(junk), Error);
}

TEST_CASE("config parses, validates, and rejects unknown fields") {
  const RunConfig defaults = config_from_json(Json::object());
  CHECK(defaults.precision == 64);
  CHECK(defaults.tolerance == 1e-8L);
  CHECK(defaults.enum_cap == 1000000);
  CHECK(defaults.seed == 0);
  CHECK(defaults.epsilon_n.empty());

  const Json j = Json::parse(
      R"({"precision": 56, "tolerance": "1e-9", "enum_cap": 5000,
          "output_cap": 100, "seed": 7, "epsilon_n": {"2": "0.45"}})");
  const RunConfig config = config_from_json(j);
  CHECK(config.precision == 56);
  CHECK(config.tolerance == 1e-9L);
  CHECK(config.enum_cap == 5000);
  CHECK(config.output_cap == 100);
  CHECK(config.seed == 7);
  REQUIRE(config.epsilon_n.count(2) == 1);
  CHECK(config.epsilon_n.at(2) == 0.45L);

  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"precision": 32})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"precision": 128})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"tolerance": "0"})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"enum_cap": 0})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"epsilon_n": {"2": "1.5"}})")), Error);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"unknown": 1})")), Error);
}

TEST_CASE("config loads from the environment variable path") {
  const std::string path = "/tmp/smf_test_config.json";
  {
    std::ofstream os(path);
    os << R"({"tolerance": "1e-10", "seed": 11})";
  }
  setenv(kConfigEnvVar, path.c_str(), 1);
  const RunConfig from_env = load_config();
  CHECK(from_env.tolerance == 1e-10L);
  CHECK(from_env.seed == 11);
  unsetenv(kConfigEnvVar);

  const RunConfig plain = load_config();
  CHECK(plain.tolerance == 1e-8L);

  const RunConfig explicit_path = load_config(path);
  CHECK(explicit_path.seed == 11);

  CHECK_THROWS_AS(load_config("/tmp/does_not_exist_smf.json"), Error);
}
