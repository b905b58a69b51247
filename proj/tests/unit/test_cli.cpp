#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hyps/hypersym.hpp"
#include "hyps/json_io.hpp"

using namespace hyps;

namespace {

const std::filesystem::path kCorpus = HYPS_CORPUS_DIR;
const std::filesystem::path kFixtures = HYPS_FIXTURES_DIR;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

cli::Outcome run(std::vector<std::string> args, std::string stdin_bytes = "") {
  return cli::run(args, [&] { return stdin_bytes; });
}

}  // namespace

TEST_CASE("verdict on the split example matches the library") {
  const auto file = (kCorpus / "example-3-5.json").string();
  const auto out = run({"verdict", "--format", "json", "--input", file});
  REQUIRE(out.exit_code == 0);
  const auto doc = parse_json(out.out);
  CHECK(doc.at("command") == "verdict");
  CHECK(doc.at("input_digest") == "sha256:" + cli::sha256_hex(slurp(file)));
  const auto datum = datum_from_json(parse_json(slurp(file)));
  CHECK(doc.at("result") == verdict_to_json(hypersymmetric_verdict(datum)));
  CHECK(doc.at("result").at("level") == "hypersymmetric");
}

TEST_CASE("stdin is used when --input is absent") {
  const auto text = slurp(kCorpus / "remark-1.json");
  const auto from_stdin = run({"check-balanced"}, text);
  const auto from_file = run({"check-balanced", "-i", (kCorpus / "remark-1.json").string()});
  CHECK(from_stdin.exit_code == 0);
  CHECK(from_stdin.out == from_file.out);
  CHECK(parse_json(from_stdin.out).at("result").at("balanced") == true);
}

TEST_CASE("payload truth values never reach the exit code") {
  const auto file = (kCorpus / "example-3-6.json").string();
  const auto sym = run({"check-symmetric", "-i", file});
  CHECK(sym.exit_code == 0);
  CHECK(parse_json(sym.out).at("result").at("symmetric") == false);
}

TEST_CASE("every command mirrors its library call") {
  const auto remark1 = (kCorpus / "remark-1.json").string();
  const auto d = datum_from_json(parse_json(slurp(remark1)));

  auto result = [&](std::vector<std::string> args) {
    const auto out = run(std::move(args));
    REQUIRE(out.exit_code == 0);
    return parse_json(out.out).at("result");
  };
  CHECK(result({"check-star", "-i", remark1}).at("condition_star") == condition_star(d));
  CHECK(result({"restrict", "-i", remark1}) == datum_to_json(restrict(d)));
  CHECK(result({"transfer", "-i", remark1}).at("transfer") == "unknown");
  CHECK(result({"hypotheses", "-i", remark1}) == theorem_report_to_json(theorem_checklist(d)));
  CHECK(result({"check-balanced", "--brauer", "1", "-i", remark1}).at("zeta_b") == is_zeta_B(d, 1));

  const auto sig = (kCorpus / "signature-3-5.json").string();
  CHECK(result({"muord", "-i", sig}) ==
        mu_ordinary_to_json(mu_ordinary(signature_from_json(parse_json(slurp(sig))))));

  const auto weil = (kCorpus / "weil-cm.json").string();
  const auto slopes = weil_input_from_json(parse_json(slurp(weil)));
  CHECK(result({"weil", "-i", weil}) == weil_to_json(slopes, weil_parameters(slopes)));

  CHECK(result({"bw", "--n", "6", "--r", "2", "--scaling", "times_r"}).at("polygon") ==
        polygon_to_json(bueltel_wedhorn(6, 2, Scaling::TimesR)));
  CHECK(result({"poset", "--g", "3"}) == poset_to_json(build_poset(enumerate_siegel(3))));
}

TEST_CASE("text format uses exponent notation") {
  const auto out = run({"muord", "--format", "text", "-i", (kCorpus / "signature-3-5.json").string()});
  CHECK(out.exit_code == 0);
  CHECK(out.out == "o1 (0)^1 (1/2)^3\no2 (1/2)^3 (1)^1\n");
  const auto bw = run({"bw", "--n", "4", "--r", "1", "-f", "text"});
  CHECK(bw.out == "(0)^2 (1/2)^2 (1)^2\n");
}

TEST_CASE("poset dot output") {
  const auto out = run({"poset", "--g", "2", "--dot"});
  CHECK(out.exit_code == 0);
  CHECK(out.out == slurp(std::filesystem::path(HYPS_GOLDEN_DIR) / "poset-g2.dot"));
}

TEST_CASE("malformed inputs exit with 2 and a one-line diagnostic") {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    CAPTURE(entry.path().string());
    const auto out = run({"verdict", "-i", entry.path().string()});
    CHECK(out.exit_code == 2);
    CHECK(out.out.empty());
    CHECK(std::count(out.err.begin(), out.err.end(), '\n') == 1);
  }
  const auto out = run({"verdict", "-i", (kFixtures / "slope-out-of-range.json").string()});
  CHECK(out.err.find("\"u1\"") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"verdict", "--bogus"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"poset"}).exit_code == 2);
  CHECK(run({"verdict", "--format", "xml"}).exit_code == 2);
  CHECK(run({"verdict", "-i", "/nonexistent/file.json"}).exit_code == 2);
  CHECK(run({"poset", "--g", "13"}).exit_code == 2);
  CHECK(run({"bw", "--n", "3", "--r", "2"}).exit_code == 2);
  CHECK(run({"restrict", "-i", (kCorpus / "example-3-5.json").string()}).exit_code == 0);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("precondition failures are input errors") {
  const auto out = run({"transfer", "-i", (kCorpus / "example-3-6.json").string()});
  CHECK(out.exit_code == 2);
  CHECK(out.err.find("PreconditionNotHypersymmetric") != std::string::npos);
}
