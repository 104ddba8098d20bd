#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "coeffs.hpp"
#include "partitions.hpp"
#include "region.hpp"
#include "tiles.hpp"

namespace dsring {

// K is the non-equivariant K ring, reached from KS by q -> 1.
enum class Mode { H, HS, KS, K };

// How fusors contribute powers of q in KS mode.
//   InZone: every fusor standing in the equivariant zone contributes q.
//   NonemptyWord: every fusor with a nonempty absorbed word contributes q.
enum class FusorWeight { InZone, NonemptyWord };

struct EngineOptions {
  CrossingRule crossings = CrossingRule::Strict;
  FusorWeight fusor_weight = FusorWeight::InZone;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct Placement {
  int col = 0, row = 0;
  const Tile* tile = nullptr;
};

struct PipeDream {
  std::vector<Placement> cells;  // scan order
  std::string north;             // labels across the top, west to east
  BoxedPartition nu;
  int E = 0;           // equivariant tiles
  int F = 0;           // fusors with a nonempty absorbed word
  int zone_fusors = 0; // fusors standing in the equivariant zone
  int fusing = 0;      // total absorbed letters

  std::vector<std::string> codes() const;
};

struct DreamStats {
  BoxedPartition nu;
  int E, F, fusing;
};

Base mode_base(Mode m);
const char* mode_name(Mode m);
Mode parse_mode(const std::string& s);
bool uses_k_tiles(Mode m);
bool allows_equivariant(Mode m);

std::vector<PipeDream> enumerate_dreams(const Region& r, Mode mode, const EngineOptions& opts = {});
DreamStats dream_stats(const PipeDream& p);
Coeff dream_weight(const PipeDream& p, Mode mode, const EngineOptions& opts = {});

// Check that p is a legal tiling of r in the given mode; throws InvariantViolation.
void verify_dream(const Region& r, const PipeDream& p, Mode mode, const EngineOptions& opts = {});

struct Expansion {
  Mode mode = Mode::H;
  BoxedPartition lambda, mu;
  std::map<BoxedPartition, Coeff> terms;
  std::size_t dream_count = 0;

  // Terms ordered by the bit string of nu.
  std::vector<std::pair<BoxedPartition, Coeff>> sorted_terms() const;
};

Expansion expand(const BoxedPartition& lambda, const BoxedPartition& mu, Mode mode, const EngineOptions& opts = {});

std::string render_dream(const Region& r, const PipeDream& p, Mode mode);
struct ParsedDream {
  Region region;
  Mode mode;
  PipeDream dream;
};
ParsedDream parse_dream(const std::string& text, const EngineOptions& opts = {});

}  // namespace dsring
