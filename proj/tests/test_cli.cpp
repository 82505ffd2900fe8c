#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "smf/halfspace.hpp"
#include "smf/io.hpp"
#include "smf/series.hpp"

using namespace smf;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

// Runs the installed binary with the given arguments and captures stdout.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(SMF_CLI_PATH) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int rc = pclose(pipe);
  RunResult r;
  r.out = out;
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("bogus").status == 1);
  CHECK(run_cli("").status == 1);
  const RunResult usage = run_cli("bogus", true);
  CHECK(usage.out.find("subcommand") != std::string::npos);
  CHECK(run_cli("enumerate --n 2 --det 4").status == 1);
  CHECK(run_cli("enumerate --n 2 --trace 3 --det 4 --reduced").status == 1);
  CHECK(run_cli("reduce --kind minkowski --input /nonexistent.json").status == 1);
  CHECK(run_cli("sturm --n 3 --ell 12").status == 1);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("sturm prints the cutoff and a tiny residual") {
  const RunResult r = run_cli("sturm --n 1 --ell 12 --M 1");
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 1);
  const Json rec = Json::parse(lines[0]);
  CHECK(rec.at("pass").get<bool>());
  CHECK(parse_real(rec.at("R").get<std::string>()) > 2);
  CHECK(parse_real(rec.at("residual").get<std::string>()) < 1e-10L);
}

TEST_CASE("enumerate emits matrices and a counting summary") {
  const RunResult r = run_cli("enumerate --n 2 --M 1 --trace 2");
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 4);
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    const SymMatQ t = symmat_from_json(Json::parse(lines[i]));
    CHECK(t.dim() == 2);
    CHECK(exact_det(t) > 0);
  }
  const Json summary = Json::parse(lines.back());
  CHECK(summary.at("count").get<std::size_t>() == 3);
  CHECK(summary.at("bound").get<std::string>() == "16");
  CHECK(summary.at("pass").get<bool>());
}

TEST_CASE("enumerate --det --reduced lists representatives") {
  const RunResult r = run_cli("enumerate --n 2 --M 1 --det 4 --reduced");
  REQUIRE(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2);
  const Json summary = Json::parse(lines.back());
  CHECK(summary.at("count").get<std::size_t>() == lines.size() - 1);
  CHECK(summary.at("pass").get<bool>());
}

TEST_CASE("reduce certifies a shifted form") {
  write_text("/tmp/smf_cli_mat.json", R"([["13","5"],["5","2"]])");
  const RunResult r = run_cli("reduce --kind minkowski --input /tmp/smf_cli_mat.json");
  REQUIRE(r.status == 0);
  const Json rec = Json::parse(lines_of(r.out).at(0));
  CHECK(rec.at("kind").get<std::string>() == "minkowski");
  CHECK(rec.at("pass").get<bool>());
  const SymMatQ reduced = symmat_from_json(rec.at("reduced"));
  CHECK(reduced(0, 0) <= reduced(1, 1));

  write_text("/tmp/smf_cli_pt.json",
             R"({"X": [["5","1/4"],["1/4","-3"]], "Y": [["1","9/10"],["9/10","2"]]})");
  const RunResult s = run_cli("reduce --kind siegel --input /tmp/smf_cli_pt.json");
  REQUIRE(s.status == 0);
  const Json srec = Json::parse(lines_of(s.out).at(0));
  CHECK(srec.at("pass").get<bool>());
}

TEST_CASE("evaluate matches the library on a written table") {
  const CoeffTable table = delta_table(40);
  write_coeff_table_file("/tmp/smf_cli_delta.jsonl", table);
  write_text("/tmp/smf_cli_z.json", R"({"X": [["1/3"]], "Y": [["1"]]})");

  SymMatR x(1), y(1);
  x.set(0, 0, to_real<Real>(Rational(1, 3)));
  y.set(0, 0, 1);
  const Cplx direct = eval_partial(table, {x, y});

  const RunResult r = run_cli("evaluate --table /tmp/smf_cli_delta.jsonl --z /tmp/smf_cli_z.json");
  REQUIRE(r.status == 0);
  const Json rec = Json::parse(lines_of(r.out).at(0));
  CHECK(rec.at("value_re").get<std::string>() == format_real(direct.real()));
  CHECK(rec.at("value_im").get<std::string>() == format_real(direct.imag()));

  const RunResult c = run_cli(
      "evaluate --table /tmp/smf_cli_delta.jsonl --z /tmp/smf_cli_z.json "
      "--R 10 --supbeta 2 --mu 0.866");
  REQUIRE(c.status == 0);
  const Json crec = Json::parse(lines_of(c.out).at(0));
  CHECK(parse_real(crec.at("err").get<std::string>()) > 0);
  CHECK(parse_real(crec.at("err").get<std::string>()) < 1e-6L);
}

TEST_CASE("check psym passes on the delta table and growth flags violations") {
  const CoeffTable table = delta_table(30);
  write_coeff_table_file("/tmp/smf_cli_delta30.jsonl", table);
  const RunResult r = run_cli("check --table /tmp/smf_cli_delta30.jsonl --which psym");
  CHECK(r.status == 0);
  const Json rec = Json::parse(lines_of(r.out).at(0));
  CHECK(rec.at("pass").get<bool>());
  CHECK(rec.at("violations").empty());

  // A genus-1 table cannot carry a growth schedule, the shell ratio range is
  // empty.
  CHECK(run_cli("check --table /tmp/smf_cli_delta30.jsonl --which growth").status == 1);
}

TEST_CASE("failing records exit with code 2") {
  // A genus-2 table whose base shell violates Q makes growth_certify report
  // pass=false, which the driver must surface as exit code 2.
  CoeffTable flat;
  flat.n = 2;
  flat.ell = 0;
  flat.m = 1;
  SymMatQ key(2);
  key.set(0, 0, 1);
  key.set(0, 1, 0);
  key.set(1, 1, 1);
  flat.entries[key] = Cplx(9, 0);
  write_coeff_table_file("/tmp/smf_cli_base.jsonl", flat);
  const RunResult r = run_cli(
      "check --table /tmp/smf_cli_base.jsonl --which growth --delta 1.5 --D0 2 "
      "--Q 1 --E 1");
  CHECK(r.status == 2);
  const Json rec = Json::parse(lines_of(r.out).at(0));
  CHECK_FALSE(rec.at("pass").get<bool>());
  CHECK(rec.at("min_e").get<std::string>() == "inf");
}

TEST_CASE("bounds verify reports positive margins") {
  const RunResult s = run_cli("bounds --which S --ell 12 --n 1 --mu 0.8 --M 2 --verify");
  REQUIRE(s.status == 0);
  const Json srec = Json::parse(lines_of(s.out).at(0));
  CHECK(srec.at("pass").get<bool>());
  CHECK(parse_real(srec.at("margin").get<std::string>()) > 0);

  const RunResult t = run_cli("bounds --which T --ell 12 --n 2 --mu 0.5 --M 1 --R 2 --verify");
  REQUIRE(t.status == 0);
  const Json trec = Json::parse(lines_of(t.out).at(0));
  CHECK(trec.at("pass").get<bool>());
  CHECK(parse_real(trec.at("margin").get<std::string>()) > 0);

  const RunResult u = run_cli("bounds --which sup --ell 12 --n 1 --eps 0.5 --verify");
  REQUIRE(u.status == 0);
  const Json urec = Json::parse(lines_of(u.out).at(0));
  CHECK(urec.at("pass").get<bool>());
}

TEST_CASE("verify-lemmas small grid passes and is byte-identical across runs") {
  const RunResult a = run_cli("verify-lemmas --grid small");
  const RunResult b = run_cli("verify-lemmas --grid small");
  REQUIRE(a.status == 0);
  REQUIRE(b.status == 0);
  CHECK(a.out == b.out);
  const auto lines = lines_of(a.out);
  REQUIRE(lines.size() > 10);
  for (const auto& line : lines) {
    const Json rec = Json::parse(line);
    CHECK(rec.at("pass").get<bool>());
  }
  const Json summary = Json::parse(lines.back());
  CHECK(summary.at("grid").get<std::string>() == "small");
}

TEST_CASE("config file controls the enumeration cap") {
  write_text("/tmp/smf_cli_cfg.json", R"({"enum_cap": 2})");
  const RunResult r = run_cli("enumerate --n 2 --M 1 --trace 2 --config /tmp/smf_cli_cfg.json");
  CHECK(r.status == 1);
  const RunResult ok = run_cli("enumerate --n 2 --M 1 --trace 2 --config /tmp/smf_cli_cfg.json",
                               true);
  CHECK(ok.out.find("cap") != std::string::npos);
}

TEST_CASE("human flag pretty-prints without changing values") {
  const RunResult plain = run_cli("sturm --n 1 --ell 12");
  const RunResult pretty = run_cli("sturm --n 1 --ell 12 --human");
  REQUIRE(plain.status == 0);
  REQUIRE(pretty.status == 0);
  CHECK(plain.out != pretty.out);
  CHECK(Json::parse(plain.out) == Json::parse(pretty.out));
}
