#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <cctype>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <unistd.h>

#include "cli.hpp"
#include "growca/automaton.hpp"
#include "growca/cipher.hpp"
#include "growca/randomness.hpp"
#include "reference_oracle.hpp"

namespace fs = std::filesystem;
using growca::Bytes;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "growca");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = growca::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("growca_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

Bytes slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

}  // namespace

TEST_CASE("grow writes the final register") {
  TempDir dir;
  const auto out = dir / "ks.bin";
  const Result r = run({"grow", "--seed", "abcdefghijklmnop", "--length", "32768", "--out", out});
  CHECK(r.code == 0);
  const Bytes ks = slurp(out);
  CHECK(ks.size() == 32768);
  CHECK(growca::entropy(ks) == doctest::Approx(0.9993882799247457).epsilon(1e-12));
}

TEST_CASE("grow from hex and from file") {
  TempDir dir;
  const Bytes seed{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(run({"grow", "--seed-hex", "010203040506070809", "--length", "40", "--out", dir / "a"}).code == 0);
  CHECK(slurp(dir / "a") == oracle::run_ca(seed, 40));

  spit(dir / "seed", seed);
  CHECK(run({"grow", "--seed-file", dir / "seed", "--length", "40", "--out", dir / "b"}).code == 0);
  CHECK(slurp(dir / "b") == slurp(dir / "a"));
}

TEST_CASE("grow validation errors exit 2 without output") {
  TempDir dir;
  const auto out = dir / "never";
  auto check_usage = [&](std::vector<std::string> args) {
    const Result r = run(std::move(args));
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK_FALSE(fs::exists(out));
  };
  check_usage({"grow", "--seed", "ab", "--length", "100", "--out", out});
  check_usage({"grow", "--seed-hex", "010203", "--length", "5", "--out", out});
  check_usage({"grow", "--seed-hex", "000000000000000000", "--length", "50", "--out", out});
  check_usage({"grow", "--seed-hex", "0g0000000000000000", "--length", "50", "--out", out});
  check_usage({"grow", "--seed", "abcdefghijklmnop", "--length", "10", "--out", out});
  check_usage({"grow", "--seed", "abcdefghijklmnop", "--out", out});
  check_usage({"grow", "--length", "100", "--out", out});
  check_usage({"grow", "--seed", "abcdefghijklmnop", "--seed-hex", "01", "--length", "100",
               "--out", out});
  check_usage({"grow", "--seed-file", dir / "missing", "--length", "100", "--out", out});
  check_usage({"frobnicate"});
  check_usage({});

  const Result r = run({"grow", "--seed", "ab", "--length", "100", "--out", out});
  CHECK(r.err.find("SeedTooShort") != std::string::npos);
}

TEST_CASE("encrypt then decrypt restores the file") {
  TempDir dir;
  std::mt19937_64 rng(9);
  const Bytes plain = oracle::random_bytes(rng, 3000, false);
  spit(dir / "plain", plain);

  CHECK(run({"encrypt", "--key", "Est aliquam velit sed.", "--in", dir / "plain", "--out",
             dir / "ct"}).code == 0);
  const Bytes ct = slurp(dir / "ct");
  CHECK(ct == growca::crypt(growca::CipherKey(Bytes{'E', 's', 't', ' ', 'a', 'l', 'i', 'q', 'u',
                                                    'a', 'm', ' ', 'v', 'e', 'l', 'i', 't', ' ',
                                                    's', 'e', 'd', '.'}),
                            plain));
  CHECK(run({"decrypt", "--key", "Est aliquam velit sed.", "--in", dir / "ct", "--out",
             dir / "back"}).code == 0);
  CHECK(slurp(dir / "back") == plain);

  // encrypt and decrypt are the same operation
  CHECK(run({"encrypt", "--key", "Est aliquam velit sed.", "--in", dir / "ct", "--out",
             dir / "back2"}).code == 0);
  CHECK(slurp(dir / "back2") == plain);
}

TEST_CASE("base64 wrapping round-trips and stays URL safe") {
  TempDir dir;
  const std::string text =
      "Voluptatem eius porro eius ut voluptatem. Quiquia dolor modi sed porro.";
  for (std::size_t len : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{4}, std::size_t{5}, text.size()}) {
    spit(dir / "plain", Bytes(text.begin(), text.begin() + len));
    REQUIRE(run({"encrypt", "--base64", "--key-hex", "0102030405060708090a", "--in", dir / "plain",
                 "--out", dir / "ct.txt"}).code == 0);
    const Bytes encoded = slurp(dir / "ct.txt");
    for (std::uint8_t c : encoded) {
      const bool ok = std::isalnum(c) || c == '-' || c == '_' || c == '=' || c == '\n';
      CHECK(ok);
    }
    REQUIRE(run({"decrypt", "--base64", "--key-hex", "0102030405060708090a", "--in",
                 dir / "ct.txt", "--out", dir / "back"}).code == 0);
    CHECK(slurp(dir / "back") == Bytes(text.begin(), text.begin() + len));
  }

  spit(dir / "junk", Bytes{'a', '+', 'b', 'c'});
  CHECK(run({"decrypt", "--base64", "--key-hex", "0102030405060708090a", "--in", dir / "junk",
             "--out", dir / "never"}).code == 2);
  CHECK_FALSE(fs::exists(dir / "never"));
}

TEST_CASE("crypt rejects empty input and bad keys") {
  TempDir dir;
  spit(dir / "empty", Bytes{});
  spit(dir / "plain", Bytes{1, 2, 3});
  Result r = run({"encrypt", "--key", "Est aliquam velit sed.", "--in", dir / "empty", "--out",
                  dir / "never"});
  CHECK(r.code == 2);
  CHECK(r.err.find("Empty source.") != std::string::npos);
  CHECK(run({"encrypt", "--key", "short", "--in", dir / "plain", "--out", dir / "never"}).code == 2);
  CHECK(run({"encrypt", "--in", dir / "plain", "--out", dir / "never"}).code == 2);
  CHECK_FALSE(fs::exists(dir / "never"));
}

TEST_CASE("analyze emits the report and maps the verdict to the exit code") {
  TempDir dir;
  REQUIRE(run({"grow", "--seed", "abcdefghijklmnop", "--length", "32768", "--out", dir / "ks"}).code == 0);

  Result r = run({"analyze", "--in", dir / "ks", "--report", dir / "report.json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(slurp(dir / "report.json"));
  const std::vector<std::string> fields{"entropy",        "compression_ratio", "compressor_id",
                                        "histogram_chi2", "histogram_p",       "rayleigh_ks",
                                        "rayleigh_p",     "phase_chi2",        "phase_p",
                                        "passed"};
  CHECK(j.size() == fields.size());
  for (const auto& f : fields) CHECK(j.contains(f));
  CHECK(j["compressor_id"] == "bzip2-9");
  CHECK(j["passed"] == true);
  CHECK(j["entropy"].get<double>() == doctest::Approx(0.9993882799247457).epsilon(1e-12));

  // piping grow output through analyze reproduces the in-process verdict
  const growca::RandomnessReport in_process =
      growca::full_report(slurp(dir / "ks"), growca::Bzip2Compressor{});
  CHECK(j["entropy"].get<double>() == in_process.entropy);
  CHECK(j["compression_ratio"].get<double>() == in_process.compression_ratio);
  CHECK(j["histogram_p"].get<double>() == in_process.histogram_p);
  CHECK(j["rayleigh_ks"].get<double>() == in_process.rayleigh_ks);
  CHECK(j["rayleigh_p"].get<double>() == in_process.rayleigh_p);
  CHECK(j["phase_chi2"].get<double>() == in_process.phase_chi2);
  CHECK(j["phase_p"].get<double>() == in_process.phase_p);
  CHECK(j["passed"].get<bool>() == in_process.passed);

  // without --report the JSON goes to stdout
  r = run({"analyze", "--in", dir / "ks", "--compressor", "bzip2-5"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["compressor_id"] == "bzip2-5");

  spit(dir / "zeros", Bytes(32768, 0));
  r = run({"analyze", "--in", dir / "zeros", "--report", dir / "zeros.json"});
  CHECK(r.code == 1);
  const auto z = nlohmann::json::parse(slurp(dir / "zeros.json"));
  CHECK(z["entropy"].get<double>() == 0.0);
  CHECK(z["passed"] == false);

  spit(dir / "small", Bytes(100, 7));
  CHECK(run({"analyze", "--in", dir / "small", "--report", dir / "never.json"}).code == 2);
  CHECK(run({"analyze", "--in", dir / "ks", "--compressor", "lzma", "--report", dir / "never.json"})
            .code == 2);
  CHECK_FALSE(fs::exists(dir / "never.json"));
}

TEST_CASE("render writes a PGM of the growth triangle") {
  TempDir dir;
  CHECK(run({"render", "--seed", "abcdefghijklmnop", "--length", "1024", "--out", dir / "fig.pgm"})
            .code == 0);
  const Bytes pgm = slurp(dir / "fig.pgm");
  const std::string header = "P5\n1009 1024\n255\n";
  REQUIRE(pgm.size() == header.size() + 1009 * 1024);
  CHECK(std::string(pgm.begin(), pgm.begin() + header.size()) == header);

  CHECK(run({"render", "--seed", "abcdefghijklmnop", "--length", "16", "--out", dir / "one.pgm"})
            .code == 0);
  const Bytes one = slurp(dir / "one.pgm");
  const std::string one_header = "P5\n1 16\n255\n";
  CHECK(std::string(one.begin(), one.begin() + one_header.size()) == one_header);
  CHECK(one.size() == one_header.size() + 16);

  CHECK(run({"render", "--seed", "abcdefghijklmnop", "--length", "1024"}).code == 2);
}

TEST_CASE("help exits 0") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("grow") != std::string::npos);
}
