#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dsring {

enum class Half { Lower, Upper };
enum class Kind { Crossing, Dot, Fusor, Displacer };
enum class TileMode { H, K };

// Which crossings with a multi-letter vertical word are admitted.
//   Strict: the horizontal letter may not occur in the vertical word.
//   Loose: only V != b and V = 1 => b = 0, as for single letters.
enum class CrossingRule { Strict, Loose };

// A tile with its four edge labels. Vertical labels are words (the singleton
// "0" or "1" included); horizontal labels are single letters.
struct Tile {
  Half half = Half::Lower;
  Kind kind = Kind::Crossing;
  std::string word;  // V of the defining lower tile
  char letter = 0;   // b or c of the defining lower tile (0 when unused)
  std::string west, east;
  char north = '0', south = '0';

  std::string code() const;
  bool is_equivariant() const;
  bool is_strict() const;
  int fusing_letters() const;
  bool is_weighted_fusor() const;
  bool is_fusor() const { return kind == Kind::Fusor; }
  bool operator==(const Tile& o) const { return code() == o.code(); }
};

bool legal_lower_word(const std::string& w);
bool legal_upper_word(const std::string& w);
std::string swap01(const std::string& w);

Tile make_crossing(const std::string& v, char b);
Tile make_dot(char b);
Tile make_fusor(const std::string& v);
Tile make_displacer(const std::string& v, char c);

Tile tile_mirror(const Tile& t);

// Upper crossings where a horizontal pipe ending in R is crossed by a vertical Q.
// They are dropped from the upper catalog: with them the H rule exceeds the
// Littlewood-Richardson numbers from n = 7 on, e.g. (2,2,2) in 3x2 times (1) in 1x1.
bool blocked_upper_crossing(const Tile& t);

class Catalog {
 public:
  Catalog(Half half, TileMode mode, CrossingRule rule = CrossingRule::Strict);
  Catalog(const Catalog&) = delete;
  Catalog& operator=(const Catalog&) = delete;
  Catalog(Catalog&&) = default;

  Half half() const { return half_; }
  TileMode mode() const { return mode_; }
  const std::vector<Tile>& tiles() const { return tiles_; }

  // Lower catalogs are keyed by (west, south), upper ones by (east, south).
  const std::vector<const Tile*>& match(const std::string& side, char south) const;
  std::vector<Tile> match(const std::string& side, char south, bool eq_allowed) const;

 private:
  Half half_;
  TileMode mode_;
  std::vector<Tile> tiles_;
  std::map<std::pair<std::string, char>, std::vector<const Tile*>> index_;
};

const Catalog& catalog(Half half, TileMode mode, CrossingRule rule = CrossingRule::Strict);

std::vector<Tile> match_lower(const std::string& west, char south, TileMode mode, bool eq_allowed,
                              CrossingRule rule = CrossingRule::Strict);
std::vector<Tile> match_upper(const std::string& east, char south, TileMode mode, bool eq_allowed,
                              CrossingRule rule = CrossingRule::Strict);

// Parse a tile code such as "CR(R1;0)" or "UFU(R)".
Tile parse_tile(const std::string& code);

struct CatalogCounts {
  int crossings = 0, dots = 0, fusors = 0, displacers = 0;
  int total() const { return crossings + dots + fusors + displacers; }
};
CatalogCounts count_catalog(const Catalog& c);

}  // namespace dsring
