#include "dsring/dsring.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "enumerate.hpp"
#include "json_io.hpp"
#include "juggling.hpp"
#include "oracle.hpp"
#include "ring.hpp"
#include "selftest.hpp"

using namespace dsring;

struct dsr_expansion {
  Expansion value;
};

struct dsr_dreams {
  Region region;
  Mode mode;
  EngineOptions opts;
  std::vector<PipeDream> dreams;
};

struct dsr_pattern {
  JugglingPattern value;
};

namespace {

thread_local std::string g_last_error;

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

template <class F>
dsr_status guard(F&& f) {
  try {
    g_last_error.clear();
    f();
    return DSR_OK;
  } catch (const InvariantViolation& e) {
    g_last_error = e.what();
    return DSR_E_INVARIANT;
  } catch (const OverflowError& e) {
    g_last_error = e.what();
    return DSR_E_OVERFLOW;
  } catch (const std::out_of_range& e) {
    g_last_error = e.what();
    return DSR_E_RANGE;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DSR_E_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return DSR_E_ARGUMENT;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return DSR_E_NOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DSR_E_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return DSR_E_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw std::invalid_argument(std::string(what) + " is null");
}

Mode to_mode(dsr_ring r) {
  switch (r) {
    case DSR_RING_H: return Mode::H;
    case DSR_RING_HS: return Mode::HS;
    case DSR_RING_KS: return Mode::KS;
    case DSR_RING_K: return Mode::K;
  }
  throw std::invalid_argument("unknown ring");
}

EngineOptions to_opts(const dsr_options* o) {
  EngineOptions e;
  if (!o) return e;
  e.crossings = o->strict_crossings ? CrossingRule::Strict : CrossingRule::Loose;
  e.fusor_weight = o->fusor_weight_in_zone ? FusorWeight::InZone : FusorWeight::NonemptyWord;
  return e;
}

BoxedPartition to_partition(const dsr_partition* p, const char* what) {
  need(p, what);
  if (p->nparts && !p->parts) throw std::invalid_argument(std::string(what) + " parts are null");
  std::vector<int> parts(p->parts, p->parts + p->nparts);
  try {
    return BoxedPartition(parts, p->rows, p->cols);
  } catch (const std::invalid_argument& e) {
    if (std::string(what) == "partition") throw;
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

Partition to_plain(const int* p, std::size_t n, const char* what) {
  if (n && !p) throw std::invalid_argument(std::string(what) + " is null");
  try {
    return strip(Partition(p, p + n));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

const PipeDream& dream_at(const dsr_dreams* d, std::size_t i) {
  need(d, "dreams");
  if (i >= d->dreams.size()) throw RangeError("dream index out of range");
  return d->dreams[i];
}

std::string tiles_text(const Catalog& c, bool json, CrossingRule rule) {
  auto n = count_catalog(c);
  if (json) {
    nlohmann::json tiles = nlohmann::json::array();
    for (const auto& t : c.tiles())
      tiles.push_back({{"code", t.code()},
                       {"west", t.west},
                       {"north", std::string(1, t.north)},
                       {"south", std::string(1, t.south)},
                       {"east", t.east}});
    return nlohmann::json{{"half", c.half() == Half::Lower ? "lower" : "upper"},
                          {"mode", c.mode() == TileMode::H ? "H" : "K"},
                          {"crossings", rule == CrossingRule::Strict ? "strict" : "loose"},
                          {"count", n.total()},
                          {"breakdown",
                           {{"crossing", n.crossings}, {"dot", n.dots}, {"fusor", n.fusors}, {"displacer", n.displacers}}},
                          {"tiles", tiles}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  os << (c.half() == Half::Lower ? "lower" : "upper") << " " << (c.mode() == TileMode::H ? "H" : "K")
     << " catalog (" << (rule == CrossingRule::Strict ? "strict" : "loose") << " crossings): " << n.total()
     << " tiles\n";
  os << "  crossing " << n.crossings << ", dot " << n.dots << ", fusor " << n.fusors << ", displacer "
     << n.displacers << "\n";
  for (const auto& t : c.tiles())
    os << "  " << t.code() << "  W=" << t.west << " N=" << t.north << " S=" << t.south << " E=" << t.east << "\n";
  return os.str();
}

}  // namespace

extern "C" {

const char* dsr_version(void) { return "1.0.0"; }

const char* dsr_last_error(void) { return g_last_error.c_str(); }

const char* dsr_status_string(dsr_status s) {
  switch (s) {
    case DSR_OK: return "ok";
    case DSR_E_ARGUMENT: return "invalid argument";
    case DSR_E_INVARIANT: return "internal invariant violation";
    case DSR_E_OVERFLOW: return "integer overflow";
    case DSR_E_NOMEM: return "out of memory";
    case DSR_E_RANGE: return "index out of range";
    case DSR_E_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void dsr_string_free(char* s) { std::free(s); }

void dsr_options_default(dsr_options* o) {
  if (!o) return;
  o->strict_crossings = 1;
  o->fusor_weight_in_zone = 1;
}

dsr_status dsr_partition_check(const dsr_partition* p) {
  return guard([&] { to_partition(p, "partition"); });
}

dsr_status dsr_parse_parts(const char* text, int* parts, size_t cap, size_t* count) {
  return guard([&] {
    need(text, "text");
    need(count, "count");
    // Parse against a box large enough to hold anything; the caller checks its own box.
    auto p = parse_partition(text, 64, 1000000);
    Partition s = strip(p.parts);
    if (s.size() > cap) throw std::invalid_argument("too many parts");
    if (!s.empty()) need(parts, "parts");
    for (std::size_t i = 0; i < s.size(); ++i) parts[i] = s[i];
    *count = s.size();
  });
}

dsr_status dsr_expand(dsr_ring ring, const dsr_partition* lambda, const dsr_partition* mu, const dsr_options* opts,
                      dsr_expansion** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    auto e = expand(to_partition(lambda, "lambda"), to_partition(mu, "mu"), to_mode(ring), to_opts(opts));
    *out = new dsr_expansion{std::move(e)};
  });
}

size_t dsr_expansion_term_count(const dsr_expansion* e) { return e ? e->value.terms.size() : 0; }

size_t dsr_expansion_dream_count(const dsr_expansion* e) { return e ? e->value.dream_count : 0; }

dsr_status dsr_expansion_term(const dsr_expansion* e, size_t i, char** nu_bits, char** coeff) {
  return guard([&] {
    need(e, "expansion");
    auto terms = e->value.sorted_terms();
    if (i >= terms.size()) throw RangeError("term index out of range");
    if (nu_bits) *nu_bits = dup(bits_of(terms[i].first));
    if (coeff) *coeff = dup(terms[i].second.to_text());
  });
}

dsr_status dsr_expansion_format(const dsr_expansion* e, dsr_format fmt, char** out) {
  return guard([&] {
    need(e, "expansion");
    need(out, "out");
    switch (fmt) {
      case DSR_OUT_JSON: *out = dup(expansion_to_json(e->value).dump(2) + "\n"); break;
      case DSR_OUT_LATEX: *out = dup(to_latex(from_expansion(e->value))); break;
      default: *out = dup(to_text(from_expansion(e->value))); break;
    }
  });
}

void dsr_expansion_free(dsr_expansion* e) { delete e; }

dsr_status dsr_dreams_enumerate(dsr_ring ring, const dsr_partition* lambda, const dsr_partition* mu,
                                const dsr_options* opts, dsr_dreams** out) {
  return guard([&] {
    need(out, "out");
    *out = nullptr;
    auto d = std::make_unique<dsr_dreams>();
    d->region = build_region(to_partition(lambda, "lambda"), to_partition(mu, "mu"));
    d->mode = to_mode(ring);
    d->opts = to_opts(opts);
    d->dreams = enumerate_dreams(d->region, d->mode, d->opts);
    *out = d.release();
  });
}

size_t dsr_dreams_count(const dsr_dreams* d) { return d ? d->dreams.size() : 0; }

dsr_status dsr_dream_info_get(const dsr_dreams* d, size_t i, dsr_dream_info* info, char** nu_bits) {
  return guard([&] {
    const auto& p = dream_at(d, i);
    if (info) *info = dsr_dream_info{p.E, p.F, p.fusing};
    if (nu_bits) *nu_bits = dup(p.north);
  });
}

dsr_status dsr_dream_weight(const dsr_dreams* d, size_t i, char** coeff) {
  return guard([&] {
    need(coeff, "coeff");
    *coeff = dup(dream_weight(dream_at(d, i), d->mode, d->opts).to_text());
  });
}

dsr_status dsr_dream_format(const dsr_dreams* d, size_t i, dsr_format fmt, char** out) {
  return guard([&] {
    need(out, "out");
    const auto& p = dream_at(d, i);
    if (fmt == DSR_OUT_JSON)
      *out = dup(dream_to_json(p).dump() + "\n");
    else if (fmt == DSR_OUT_TEXT)
      *out = dup(render_dream(d->region, p, d->mode));
    else
      throw std::invalid_argument("dreams have no LaTeX form");
  });
}

void dsr_dreams_free(dsr_dreams* d) { delete d; }

dsr_status dsr_dream_rerender(const char* rendered, const dsr_options* opts, char** out) {
  return guard([&] {
    need(rendered, "rendered");
    need(out, "out");
    auto parsed = parse_dream(rendered, to_opts(opts));
    *out = dup(render_dream(parsed.region, parsed.dream, parsed.mode));
  });
}

dsr_status dsr_region_render(const dsr_partition* lambda, const dsr_partition* mu, char** out) {
  return guard([&] {
    need(out, "out");
    *out = dup(build_region(to_partition(lambda, "lambda"), to_partition(mu, "mu")).render());
  });
}

dsr_status dsr_lr_coefficient(const int* lambda, size_t nl, const int* mu, size_t nm, const int* nu, size_t nn,
                              int64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = lr_coefficient(to_plain(lambda, nl, "lambda"), to_plain(mu, nm, "mu"), to_plain(nu, nn, "nu"));
  });
}

dsr_status dsr_lr_expand(const int* lambda, size_t nl, const int* mu, size_t nm, dsr_format fmt, char** out) {
  return guard([&] {
    need(out, "out");
    auto e = lr_expand(to_plain(lambda, nl, "lambda"), to_plain(mu, nm, "mu"));
    if (fmt == DSR_OUT_JSON) {
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [nu, c] : e) terms.push_back({{"nu", nu}, {"coeff", c}});
      *out = dup(nlohmann::json{{"terms", terms}}.dump(2) + "\n");
      return;
    }
    std::ostringstream os;
    for (const auto& [nu, c] : e) {
      std::string s;
      for (std::size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu[i]);
      if (fmt == DSR_OUT_LATEX)
        os << (os.tellp() > 0 ? " + " : "") << (c == 1 ? "" : std::to_string(c)) << "s_{(" << s << ")}";
      else
        os << c << "  (" << s << ")\n";
    }
    if (fmt == DSR_OUT_LATEX) os << "\n";
    *out = dup(os.str());
  });
}

dsr_status dsr_tiles_report(dsr_half half, dsr_tile_mode mode, const dsr_options* opts, dsr_format fmt, char** out) {
  return guard([&] {
    need(out, "out");
    auto rule = to_opts(opts).crossings;
    const auto& c = catalog(half == DSR_HALF_LOWER ? Half::Lower : Half::Upper,
                            mode == DSR_TILES_H ? TileMode::H : TileMode::K, rule);
    *out = dup(tiles_text(c, fmt == DSR_OUT_JSON, rule));
  });
}

dsr_status dsr_tiles_count(dsr_half half, dsr_tile_mode mode, const dsr_options* opts, int* count) {
  return guard([&] {
    need(count, "count");
    const auto& c = catalog(half == DSR_HALF_LOWER ? Half::Lower : Half::Upper,
                            mode == DSR_TILES_H ? TileMode::H : TileMode::K, to_opts(opts).crossings);
    *count = static_cast<int>(c.tiles().size());
  });
}

dsr_status dsr_pattern_from_window(const long* window, size_t n, dsr_pattern** out) {
  return guard([&] {
    need(out, "out");
    if (n) need(window, "window");
    *out = new dsr_pattern{pattern_from_window(std::vector<long>(window, window + n))};
  });
}

dsr_status dsr_pattern_schubert(const char* bits, dsr_pattern** out) {
  return guard([&] {
    need(bits, "bits");
    need(out, "out");
    *out = new dsr_pattern{schubert_pattern(bits)};
  });
}

dsr_status dsr_pattern_sigma_prime(const dsr_partition* lambda, const dsr_partition* mu, dsr_pattern** out) {
  return guard([&] {
    need(out, "out");
    *out = new dsr_pattern{sigma_prime(to_partition(lambda, "lambda"), to_partition(mu, "mu"))};
  });
}

dsr_status dsr_pattern_dual(const dsr_pattern* p, dsr_pattern** out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    *out = new dsr_pattern{dual(p->value)};
  });
}

dsr_status dsr_pattern_rotate(const dsr_pattern* p, long m, dsr_pattern** out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    *out = new dsr_pattern{rotate(p->value, m)};
  });
}

dsr_status dsr_pattern_is_sorted(const dsr_pattern* p, int level, int* out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    if (level < 0 || level > p->value.n()) throw std::invalid_argument("level must lie in [0, n]");
    *out = is_sorted(p->value, level) ? 1 : 0;
  });
}

int dsr_pattern_n(const dsr_pattern* p) { return p ? p->value.n() : 0; }

int dsr_pattern_ball_number(const dsr_pattern* p) { return p ? p->value.ball_number() : 0; }

size_t dsr_pattern_window(const dsr_pattern* p, long* out, size_t cap) {
  if (!p) return 0;
  const auto& w = p->value.window();
  for (std::size_t i = 0; i < w.size() && i < cap && out; ++i) out[i] = w[i];
  return w.size();
}

dsr_status dsr_pattern_format(const dsr_pattern* p, dsr_format fmt, char** out) {
  return guard([&] {
    need(p, "pattern");
    need(out, "out");
    auto rk = rank_and_essential(p->value);
    if (fmt == DSR_OUT_JSON) {
      auto j = pattern_to_json(p->value);
      nlohmann::json ess = nlohmann::json::array();
      for (auto [i, jj] : rk.essential) ess.push_back({i, jj, rk.r[i][jj]});
      j["essential"] = ess;
      *out = dup(j.dump(2) + "\n");
      return;
    }
    std::string s = render_pattern(p->value);
    s += "essential boxes (i,j:r):";
    for (auto [i, jj] : rk.essential) s += " (" + std::to_string(i) + "," + std::to_string(jj) + ":" +
                                            std::to_string(rk.r[i][jj]) + ")";
    *out = dup(s + "\n");
  });
}

void dsr_pattern_free(dsr_pattern* p) { delete p; }

dsr_status dsr_selftest(char** report, int* failures) {
  return guard([&] {
    auto r = run_selftest();
    if (report) *report = dup(r.report);
    if (failures) *failures = r.failed;
  });
}

}  // extern "C"
