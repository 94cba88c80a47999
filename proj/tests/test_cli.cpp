#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "harmonic/cli.hpp"

using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = harmonic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("cli_test_") + name;
  std::ofstream file(path);
  file << content;
  return path;
}

}  // namespace

TEST_CASE("kernel subcommand prints the closed-form value") {
  const auto result = run_cli({"kernel", "--r", "0.5", "--theta", "0"});
  CHECK(result.code == 0);
  const auto j = json::parse(result.out);
  CHECK(j["value"].get<double>() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("extend-disk evaluates the identity boundary") {
  const auto result =
      run_cli({"extend-disk", "--boundary", "identity", "--at", "0.5,0"});
  CHECK(result.code == 0);
  const auto j = json::parse(result.out);
  CHECK(j["re"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(std::abs(j["im"].get<double>()) < 1e-9);
}

TEST_CASE("wood eval and invert print plain coordinates") {
  const auto eval = run_cli({"wood", "--eval", "1,2,3"});
  CHECK(eval.code == 0);
  CHECK(eval.out == "-20 -7 3\n");

  const auto invert = run_cli({"wood", "--invert", "-20,-7,3"});
  CHECK(invert.code == 0);
  CHECK(invert.out == "1 2 3\n");

  const auto check = run_cli({"wood", "--check"});
  CHECK(check.code == 0);
  const auto j = json::parse(check.out);
  CHECK(j["pass"].get<bool>());
  CHECK(j["roundtrip_max_error"].get<double>() < 1e-9);

  const auto check5 = run_cli({"wood", "--dim", "5", "--check"});
  CHECK(check5.code == 0);
}

TEST_CASE("wood rejects malformed points with exit code 1") {
  const auto result = run_cli({"wood", "--eval", "1,2"});
  CHECK(result.code == 1);
  CHECK(result.out.empty());
  CHECK(result.err.find("expected 3") != std::string::npos);

  const auto garbage = run_cli({"wood", "--eval", "1,x,3"});
  CHECK(garbage.code == 1);
  CHECK(garbage.err.find("malformed numeric argument") != std::string::npos);
}

TEST_CASE("tennisball eval fixes the phi = 0 line") {
  const auto result = run_cli({"tennisball", "--p", "5", "--eval", "0,1.0"});
  CHECK(result.code == 0);
  std::istringstream values(result.out);
  double phi = -1.0, theta = -1.0;
  values >> phi >> theta;
  CHECK(phi == 0.0);
  CHECK(theta == doctest::Approx(1.0).epsilon(1e-12));

  const auto identities = run_cli({"tennisball", "--p", "5", "--identities"});
  CHECK(identities.code == 0);
  CHECK(json::parse(identities.out)["pass"].get<bool>());
}

TEST_CASE("rkc-verify reports a consistent verdict for homeomorphism data") {
  const auto result = run_cli({"rkc-verify", "--boundary", "sinperturb:a=0.3",
                               "--grid", "8x32", "--nodes", "512"});
  CHECK(result.code == 0);
  const auto j = json::parse(result.out);
  CHECK(j["verdict"].get<std::string>() == "consistent-with-injective");
  CHECK(j["min_jacobian"].get<double>() > 0.0);

  // byte-identical determinism
  const auto again = run_cli({"rkc-verify", "--boundary", "sinperturb:a=0.3",
                              "--grid", "8x32", "--nodes", "512"});
  CHECK(again.out == result.out);
}

TEST_CASE("lemma-hz verdicts and hypothesis failures") {
  const auto sine_path = write_temp("sine.txt", "1 0 -0.5\n-1 0 0.5\n");
  const auto result = run_cli({"lemma-hz", "--boundary", "fourier:" + sine_path});
  CHECK(result.code == 0);
  const auto j = json::parse(result.out);
  CHECK(j["im_gz0"].get<double>() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(j["verdict"].get<std::string>() == "nonzero");

  const auto cosine_path = write_temp("cosine.txt", "1 0.5 0\n-1 0.5 0\n");
  const auto failure = run_cli({"lemma-hz", "--boundary", "fourier:" + cosine_path});
  CHECK(failure.code == 2);
  CHECK(failure.err.find("hypothesis") != std::string::npos);

  std::remove(sine_path.c_str());
  std::remove(cosine_path.c_str());
}

TEST_CASE("fold and collision subcommands") {
  const auto folded = run_cli({"fold", "--p", "5", "--z", "0.4", "--nphi", "64",
                               "--ntheta", "64"});
  CHECK(folded.code == 0);
  const auto j = json::parse(folded.out);
  CHECK(j["folded"].get<bool>());
  // documented schema: exactly these keys, in order
  const std::vector<std::string> expected_keys = {
      "p", "z", "F3_plus", "F3_minus", "folded", "axis_offset",
      "convergence_change", "resolution_flagged"};
  const auto ordered = nlohmann::ordered_json::parse(folded.out);
  std::vector<std::string> keys;
  for (const auto& item : ordered.items()) keys.push_back(item.key());
  CHECK(keys == expected_keys);

  const auto unfolded = run_cli({"fold", "--p", "0.01", "--z", "0.4", "--nphi", "64",
                                 "--ntheta", "64"});
  CHECK(unfolded.code == 2);

  const auto collision = run_cli({"collision", "--p", "5", "--nphi", "64",
                                  "--ntheta", "64"});
  CHECK(collision.code == 0);
  const auto cj = json::parse(collision.out);
  CHECK(std::abs(cj["z1"].get<double>() - cj["z2"].get<double>()) > 1e-3);

  const auto none = run_cli({"collision", "--p", "0.01", "--nphi", "64",
                             "--ntheta", "64"});
  CHECK(none.code == 2);
  CHECK(json::parse(none.out)["collision"].get<std::string>() == "none");
}

TEST_CASE("fold sweep emits one row per parameter") {
  const auto sweep = run_cli({"--format", "csv", "fold", "--sweep", "--z", "0.4",
                              "--nphi", "64", "--ntheta", "64"});
  CHECK(sweep.code == 0);
  int lines = 0;
  for (char c : sweep.out) lines += c == '\n';
  CHECK(lines == 6);  // header + 5 parameter rows
}

TEST_CASE("axis-profile emits the z,F1,F2,F3 table") {
  const auto csv = run_cli({"--format", "csv", "axis-profile", "--p", "5", "--count",
                            "9", "--nphi", "32", "--ntheta", "64"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("z,F1,F2,F3\n", 0) == 0);
  int lines = 0;
  for (char c : csv.out) lines += c == '\n';
  CHECK(lines == 10);

  const auto as_json = run_cli({"axis-profile", "--p", "5", "--count", "9", "--nphi",
                                "32", "--ntheta", "64"});
  const auto rows = json::parse(as_json.out);
  CHECK(rows.size() == 9);
  CHECK(rows.front()["z"].get<double>() == doctest::Approx(-0.8));
}

TEST_CASE("polydisk subcommand drives the polynomial machinery") {
  const auto path = write_temp(
      "poly.txt",
      "1 0 : 3 0 0 0 0 0\n1 0 : 0 0 4 0 2 0\n1 0 : 0 0 0 5 0 0\n1 0 : 0 1 2 2 0 0\n");

  const auto degree = run_cli({"polydisk", "--poly", path, "--degree"});
  CHECK(degree.code == 0);
  CHECK(json::parse(degree.out)["degree"].get<int>() == 6);

  const auto homogeneous = run_cli({"polydisk", "--poly", path, "--homogeneous"});
  CHECK(homogeneous.code == 0);
  CHECK_FALSE(json::parse(homogeneous.out)["homogeneous"].get<bool>());

  const auto eval = run_cli({"polydisk", "--poly", path, "--eval",
                             "0.1,0,0.1,0,0.1,0,0.1,0,0.1,0,0.1,0"});
  CHECK(eval.code == 0);
  const auto ej = json::parse(eval.out);
  CHECK(std::abs(ej["re"].get<double>() - ej["direct_re"].get<double>()) < 1e-9);

  const auto coeff = run_cli({"polydisk", "--poly", path, "--coeff", "0,1,2,2,0,0"});
  CHECK(coeff.code == 0);
  CHECK(json::parse(coeff.out)["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  std::remove(path.c_str());
}

TEST_CASE("sampled boundary files drive extend-disk") {
  std::ostringstream samples;
  samples.precision(17);
  for (int k = 0; k < 32; ++k) {
    const double t = 2.0 * 3.14159265358979312 * k / 32.0;
    samples << std::cos(t) << " " << std::sin(t) << "\n";
  }
  const auto path = write_temp("samples.txt", samples.str());
  const auto result =
      run_cli({"extend-disk", "--boundary", "samples:" + path, "--at", "0.5,0"});
  CHECK(result.code == 0);
  CHECK(json::parse(result.out)["re"].get<double>() ==
        doctest::Approx(0.5).epsilon(1e-9));
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli({"unknown-subcommand"}).code == 1);
  CHECK(run_cli({"kernel", "--r", "0.5"}).code == 1);          // missing --theta
  CHECK(run_cli({"kernel", "--r", "abc", "--theta", "0"}).code == 1);
  CHECK(run_cli({"extend-disk", "--boundary", "nope", "--at", "0,0"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("csv format emits key,value rows") {
  const auto result = run_cli({"--format", "csv", "kernel", "--r", "0", "--theta", "0"});
  CHECK(result.code == 0);
  CHECK(result.out.find("value,1") != std::string::npos);
}
