#include <dsring/dsring.h>

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  dsr_status status;
  ApiError(dsr_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(dsr_status s, const std::string& context) {
  if (s == DSR_OK) return;
  std::string msg = context + ": " + dsr_last_error();
  if (s == DSR_E_ARGUMENT || s == DSR_E_RANGE) throw UsageError(msg);
  throw ApiError(s, msg);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  dsr_string_free(s);
  return out;
}

struct Parts {
  std::vector<int> parts;
};

Parts parse_parts(const std::string& text, const std::string& option) {
  Parts p;
  p.parts.resize(64);
  size_t n = 0;
  if (dsr_parse_parts(text.c_str(), p.parts.data(), p.parts.size(), &n) != DSR_OK)
    throw UsageError(option + ": " + dsr_last_error());
  p.parts.resize(n);
  return p;
}

struct BoxArgs {
  int a = 0, b = 0, c = 0, d = 0;
  std::string lambda, mu;
  Parts lp, mp;
  dsr_partition lam{}, mu_{};

  void add(CLI::App* app) {
    app->add_option("--a", a, "rows of the box of lambda")->required()->check(CLI::NonNegativeNumber);
    app->add_option("--b", b, "columns of the box of lambda")->required()->check(CLI::NonNegativeNumber);
    app->add_option("--c", c, "rows of the box of mu")->required()->check(CLI::NonNegativeNumber);
    app->add_option("--d", d, "columns of the box of mu")->required()->check(CLI::NonNegativeNumber);
    app->add_option("--lambda", lambda, "first partition, comma separated (empty for none)");
    app->add_option("--mu", mu, "second partition, comma separated (empty for none)");
  }

  void resolve() {
    lp = parse_parts(lambda, "--lambda");
    mp = parse_parts(mu, "--mu");
    lam = {lp.parts.data(), lp.parts.size(), a, b};
    mu_ = {mp.parts.data(), mp.parts.size(), c, d};
    if (dsr_partition_check(&lam) != DSR_OK)
      throw UsageError("--lambda: " + std::string(dsr_last_error()) + " (box " + std::to_string(a) + "x" +
                       std::to_string(b) + " from --a/--b)");
    if (dsr_partition_check(&mu_) != DSR_OK)
      throw UsageError("--mu: " + std::string(dsr_last_error()) + " (box " + std::to_string(c) + "x" +
                       std::to_string(d) + " from --c/--d)");
  }
};

struct EngineArgs {
  std::string crossings = "strict";
  std::string fusor_weight = "zone";

  void add(CLI::App* app) {
    app->add_option("--crossings", crossings, "crossing rule: strict or loose")
        ->check(CLI::IsMember({"strict", "loose"}));
    app->add_option("--fusor-weight", fusor_weight, "which fusors carry q: zone or word")
        ->check(CLI::IsMember({"zone", "word"}));
  }

  dsr_options options() const {
    dsr_options o;
    dsr_options_default(&o);
    o.strict_crossings = crossings == "strict";
    o.fusor_weight_in_zone = fusor_weight == "zone";
    return o;
  }
};

const std::map<std::string, dsr_ring> kRings{
    {"h", DSR_RING_H}, {"hs", DSR_RING_HS}, {"ks", DSR_RING_KS}, {"k", DSR_RING_K}};
const std::map<std::string, dsr_format> kFormats{
    {"text", DSR_OUT_TEXT}, {"json", DSR_OUT_JSON}, {"latex", DSR_OUT_LATEX}};

std::vector<long> parse_window(const std::string& text) {
  std::vector<long> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      w.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--window: not an integer: '" + item + "'");
    }
  }
  if (w.empty()) throw UsageError("--window: empty window");
  return w;
}

using PatternPtr = std::unique_ptr<dsr_pattern, decltype(&dsr_pattern_free)>;

PatternPtr adopt(dsr_pattern* p) { return PatternPtr(p, &dsr_pattern_free); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert class products on Grassmannians by direct-sum pipe dreams"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dsr_version());

  std::string ring = "h";
  std::string out = "text";
  BoxArgs box;
  EngineArgs engine;

  auto* multiply = app.add_subcommand("multiply", "expand the product of two Schubert classes");
  multiply->add_option("--ring", ring, "h, hs, ks or k")->check(CLI::IsMember({"h", "hs", "ks", "k"}));
  box.add(multiply);
  multiply->add_option("--out", out, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
  engine.add(multiply);

  bool render_region = false;
  auto* dreams = app.add_subcommand("dreams", "list the pipe dreams of a product");
  dreams->add_option("--ring", ring, "h, hs, ks or k")->check(CLI::IsMember({"h", "hs", "ks", "k"}));
  box.add(dreams);
  dreams->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));
  dreams->add_flag("--render", render_region, "print the region with its fixed labels first");
  engine.add(dreams);

  std::string render_file = "-";
  auto* render = app.add_subcommand("render", "check a rendered dream and print it again");
  render->add_option("file", render_file, "rendered dream, '-' for standard input");
  engine.add(render);

  std::string lr_lambda, lr_mu, lr_nu;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients by tableaux");
  lr->add_option("--lambda", lr_lambda, "first partition");
  lr->add_option("--mu", lr_mu, "second partition");
  auto* nu_opt = lr->add_option("--nu", lr_nu, "print only the coefficient of this partition");
  lr->add_option("--out", out, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

  std::string half = "lower", tile_mode = "k";
  auto* tiles = app.add_subcommand("tiles", "list a tile catalog");
  tiles->add_option("--half", half, "lower or upper")->check(CLI::IsMember({"lower", "upper"}));
  tiles->add_option("--mode", tile_mode, "h or k")->check(CLI::IsMember({"h", "k"}));
  tiles->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));
  engine.add(tiles);

  std::string window, bits;
  long rotate_by = 0;
  int sorted_level = -1;
  bool take_dual = false, sigma_prime = false;
  auto* pattern = app.add_subcommand("pattern", "bounded juggling patterns");
  auto* window_opt = pattern->add_option("--window", window, "window J(1),...,J(n)");
  auto* bits_opt = pattern->add_option("--bits", bits, "Schubert pattern of a bit string");
  auto* sigma_opt = pattern->add_flag("--sigma-prime", sigma_prime, "pattern of the direct sum of two Schubert varieties");
  window_opt->excludes(bits_opt)->excludes(sigma_opt);
  bits_opt->excludes(sigma_opt);
  auto* pa = pattern->add_option("--a", box.a, "rows of the box of lambda")->check(CLI::NonNegativeNumber);
  auto* pb = pattern->add_option("--b", box.b, "columns of the box of lambda")->check(CLI::NonNegativeNumber);
  auto* pc = pattern->add_option("--c", box.c, "rows of the box of mu")->check(CLI::NonNegativeNumber);
  auto* pd = pattern->add_option("--d", box.d, "columns of the box of mu")->check(CLI::NonNegativeNumber);
  pattern->add_option("--lambda", box.lambda, "first partition");
  pattern->add_option("--mu", box.mu, "second partition");
  for (auto* o : {pa, pb, pc, pd}) o->needs(sigma_opt);
  pattern->add_flag("--dual", take_dual, "replace the pattern by its dual");
  pattern->add_option("--rotate", rotate_by, "rotate the pattern by m");
  pattern->add_option("--sorted", sorted_level, "report whether the pattern is i-sorted")
      ->check(CLI::NonNegativeNumber);
  pattern->add_option("--out", out, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* selftest = app.add_subcommand("selftest", "run the built-in checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    dsr_format fmt = kFormats.at(out);
    dsr_options opts = engine.options();

    if (multiply->parsed()) {
      box.resolve();
      dsr_expansion* e = nullptr;
      check(dsr_expand(kRings.at(ring), &box.lam, &box.mu_, &opts, &e), "multiply");
      char* s = nullptr;
      dsr_status st = dsr_expansion_format(e, fmt, &s);
      dsr_expansion_free(e);
      check(st, "multiply");
      std::cout << take(s);
    } else if (dreams->parsed()) {
      box.resolve();
      if (render_region) {
        char* s = nullptr;
        check(dsr_region_render(&box.lam, &box.mu_, &s), "dreams");
        std::cout << take(s) << "\n";
      }
      dsr_dreams* d = nullptr;
      check(dsr_dreams_enumerate(kRings.at(ring), &box.lam, &box.mu_, &opts, &d), "dreams");
      std::unique_ptr<dsr_dreams, decltype(&dsr_dreams_free)> guard(d, &dsr_dreams_free);
      size_t n = dsr_dreams_count(d);
      if (fmt == DSR_OUT_JSON) {
        std::cout << "[";
        for (size_t i = 0; i < n; ++i) {
          char* s = nullptr;
          check(dsr_dream_format(d, i, DSR_OUT_JSON, &s), "dreams");
          std::string line = take(s);
          while (!line.empty() && line.back() == '\n') line.pop_back();
          std::cout << (i ? ",\n " : "") << line;
        }
        std::cout << "]\n";
      } else {
        std::cout << n << (n == 1 ? " dream" : " dreams") << "\n";
        for (size_t i = 0; i < n; ++i) {
          char *s = nullptr, *w = nullptr;
          check(dsr_dream_format(d, i, DSR_OUT_TEXT, &s), "dreams");
          check(dsr_dream_weight(d, i, &w), "dreams");
          std::cout << "\n#" << (i + 1) << " weight " << take(w) << "\n" << take(s);
        }
      }
    } else if (render->parsed()) {
      std::string text;
      if (render_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(render_file);
        if (!in) throw UsageError("cannot read " + render_file);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      char* s = nullptr;
      check(dsr_dream_rerender(text.c_str(), &opts, &s), "render");
      std::cout << take(s);
    } else if (lr->parsed()) {
      auto l = parse_parts(lr_lambda, "--lambda");
      auto m = parse_parts(lr_mu, "--mu");
      if (nu_opt->count()) {
        auto n = parse_parts(lr_nu, "--nu");
        int64_t c = 0;
        check(dsr_lr_coefficient(l.parts.data(), l.parts.size(), m.parts.data(), m.parts.size(), n.parts.data(),
                                 n.parts.size(), &c),
              "lr");
        if (fmt == DSR_OUT_JSON)
          std::cout << "{\"coeff\": " << c << "}\n";
        else
          std::cout << c << "\n";
      } else {
        char* s = nullptr;
        check(dsr_lr_expand(l.parts.data(), l.parts.size(), m.parts.data(), m.parts.size(), fmt, &s), "lr");
        std::cout << take(s);
      }
    } else if (tiles->parsed()) {
      if (fmt == DSR_OUT_LATEX) throw UsageError("--out: tiles support text or json");
      char* s = nullptr;
      check(dsr_tiles_report(half == "lower" ? DSR_HALF_LOWER : DSR_HALF_UPPER,
                             tile_mode == "h" ? DSR_TILES_H : DSR_TILES_K, &opts, fmt, &s),
            "tiles");
      std::cout << take(s);
    } else if (pattern->parsed()) {
      dsr_pattern* raw = nullptr;
      if (window_opt->count()) {
        auto w = parse_window(window);
        check(dsr_pattern_from_window(w.data(), w.size(), &raw), "--window");
      } else if (bits_opt->count()) {
        check(dsr_pattern_schubert(bits.c_str(), &raw), "--bits");
      } else if (sigma_prime) {
        box.resolve();
        check(dsr_pattern_sigma_prime(&box.lam, &box.mu_, &raw), "--sigma-prime");
      } else {
        throw UsageError("pattern: give one of --window, --bits or --sigma-prime");
      }
      auto p = adopt(raw);
      if (take_dual) {
        check(dsr_pattern_dual(p.get(), &raw), "--dual");
        p = adopt(raw);
      }
      if (rotate_by != 0) {
        check(dsr_pattern_rotate(p.get(), rotate_by, &raw), "--rotate");
        p = adopt(raw);
      }
      char* s = nullptr;
      check(dsr_pattern_format(p.get(), fmt, &s), "pattern");
      std::cout << take(s);
      if (sorted_level >= 0) {
        int sorted = 0;
        check(dsr_pattern_is_sorted(p.get(), sorted_level, &sorted), "--sorted");
        std::cout << sorted_level << "-sorted: " << (sorted ? "yes" : "no") << "\n";
      }
    } else if (selftest->parsed()) {
      char* report = nullptr;
      int failures = 0;
      check(dsr_selftest(&report, &failures), "selftest");
      std::cout << take(report);
      return failures == 0 ? 0 : 2;
    }
  } catch (const UsageError& e) {
    std::cerr << "dsring: " << e.what() << "\n";
    return 1;
  } catch (const ApiError& e) {
    std::cerr << "dsring: " << e.what() << " (" << dsr_status_string(e.status) << ")\n";
    return 2;
  }
  return 0;
}
