#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "growca/automaton.hpp"
#include "growca/cipher.hpp"
#include "growca/compressor.hpp"
#include "growca/error.hpp"
#include "growca/randomness.hpp"
#include "growca/render.hpp"

namespace growca::cli {
namespace {

namespace fs = std::filesystem;

/// Raised for bad flags or unreadable inputs; maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exactly one of the three is expected to be set.
struct ByteSource {
  std::optional<std::string> text;
  std::optional<std::string> file;
  std::optional<std::string> hex;
};

Bytes read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw UsageError("failed reading " + path.string());
  return data;
}

void write_file(const fs::path& path, ByteView data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw Error(Errc::IoFailure, "failed writing " + path.string());
}

Bytes parse_hex(const std::string& hex) {
  if (hex.size() % 2 != 0) throw UsageError("hex input must have an even number of digits");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw UsageError(std::string("invalid hex digit '") + c + "'");
  };
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    out.push_back(static_cast<std::uint8_t>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  }
  return out;
}

Bytes resolve(const ByteSource& src) {
  if (src.text) return Bytes(src.text->begin(), src.text->end());
  if (src.hex) return parse_hex(*src.hex);
  if (src.file) return read_file(*src.file);
  throw UsageError("no seed or key given");
}

std::string base64url_encode(ByteView data) {
  std::string out(4 * ((data.size() + 2) / 3), '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()), data.data(),
                                static_cast<int>(data.size()));
  out.resize(static_cast<std::size_t>(n));
  std::replace(out.begin(), out.end(), '+', '-');
  std::replace(out.begin(), out.end(), '/', '_');
  return out;
}

Bytes base64url_decode(ByteView text) {
  std::string s;
  s.reserve(text.size() + 3);
  for (std::uint8_t c : text) {
    if (std::isspace(c)) continue;
    if (c == '+' || c == '/') throw UsageError("input is not URL-safe base64");
    s.push_back(c == '-' ? '+' : c == '_' ? '/' : static_cast<char>(c));
  }
  while (!s.empty() && s.back() == '=') s.pop_back();
  if (s.size() % 4 == 1) throw UsageError("input is not valid base64");
  const std::size_t padding = (4 - s.size() % 4) % 4;
  s.append(padding, '=');
  Bytes out(3 * s.size() / 4);
  const int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char*>(s.data()),
                                static_cast<int>(s.size()));
  if (n < 0) throw UsageError("input is not valid base64");
  out.resize(static_cast<std::size_t>(n) - padding);
  return out;
}

void add_source(CLI::App& cmd, ByteSource& src, const std::string& what) {
  auto* group = cmd.add_option_group(what + " source");
  group->add_option("--" + what, src.text, what + " as literal text (raw argument bytes)");
  group->add_option("--" + what + "-file", src.file, what + " read from a file");
  group->add_option("--" + what + "-hex", src.hex, what + " as a hex string");
  group->require_option(1, 1);
}

struct Options {
  ByteSource seed;
  ByteSource key;
  std::size_t length = 0;
  std::string in;
  std::string out;
  std::string report;
  std::string compressor = "bzip2-9";
  bool base64 = false;
};

int cmd_grow(const Options& o) {
  const CAState state = grow_to(seed_state(Seed(resolve(o.seed))), o.length);
  write_file(o.out, state.cells());
  return kExitPass;
}

int cmd_crypt(const Options& o, bool decrypt) {
  const CipherKey key(resolve(o.key));
  Bytes input = read_file(o.in);
  if (o.base64 && decrypt) input = base64url_decode(input);
  const Bytes output = crypt(key, input);
  if (o.base64 && !decrypt) {
    const std::string text = base64url_encode(output) + "\n";
    write_file(o.out, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  } else {
    write_file(o.out, output);
  }
  return kExitPass;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const auto compressor = make_compressor(o.compressor);
  const Bytes data = read_file(o.in);
  const RandomnessReport r = full_report(data, *compressor);

  nlohmann::ordered_json j;
  j["entropy"] = r.entropy;
  j["compression_ratio"] = r.compression_ratio;
  j["compressor_id"] = r.compressor_id;
  j["histogram_chi2"] = r.histogram_chi2;
  j["histogram_p"] = r.histogram_p;
  j["rayleigh_ks"] = r.rayleigh_ks;
  j["rayleigh_p"] = r.rayleigh_p;
  j["phase_chi2"] = r.phase_chi2;
  j["phase_p"] = r.phase_p;
  j["passed"] = r.passed;
  const std::string text = j.dump(2) + "\n";

  if (o.report.empty()) {
    out << text;
  } else {
    write_file(o.report, ByteView(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  return r.passed ? kExitPass : kExitTestFail;
}

int cmd_render(const Options& o) {
  const std::vector<CAState> trace = growth_trace(Seed(resolve(o.seed)), o.length);
  write_pgm(render_growth(trace), fs::path(o.out));
  return kExitPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growing cellular automaton keystream generator, XOR cipher and randomness analysis"};
  app.name("growca");
  app.require_subcommand(1);

  Options o;
  auto length_check = CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max() / 4);

  auto* grow = app.add_subcommand("grow", "Grow a seed and write the final register bytes");
  add_source(*grow, o.seed, "seed");
  grow->add_option("--length", o.length, "final register length")->required()->check(length_check);
  grow->add_option("--out", o.out, "output file")->required();

  CLI::App* crypt_cmds[2] = {
      app.add_subcommand("encrypt", "XOR a file with the keystream"),
      app.add_subcommand("decrypt", "XOR a file with the keystream (same operation as encrypt)")};
  for (CLI::App* c : crypt_cmds) {
    add_source(*c, o.key, "key");
    c->add_option("--in", o.in, "input file")->required();
    c->add_option("--out", o.out, "output file")->required();
    c->add_flag("--base64", o.base64,
                "encrypt: write URL-safe base64 text; decrypt: read URL-safe base64 text");
  }

  auto* analyze = app.add_subcommand("analyze", "Run the randomness battery and emit a JSON report");
  analyze->add_option("--in", o.in, "input file (at least 4096 bytes)")->required();
  analyze->add_option("--report", o.report, "JSON report path (default: standard output)");
  analyze->add_option("--compressor", o.compressor, "compressor id, bzip2 or bzip2-1..bzip2-9")
      ->capture_default_str();

  auto* render = app.add_subcommand("render", "Render the growth triangle as a binary PGM");
  add_source(*render, o.seed, "seed");
  render->add_option("--length", o.length, "final register length")->required()->check(length_check);
  render->add_option("--out", o.out, "output PGM file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "growca: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (grow->parsed()) return cmd_grow(o);
    if (crypt_cmds[0]->parsed()) return cmd_crypt(o, false);
    if (crypt_cmds[1]->parsed()) return cmd_crypt(o, true);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (render->parsed()) return cmd_render(o);
  } catch (const Error& e) {
    err << "growca: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "growca: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace growca::cli
