#include <doctest.h>

#include <algorithm>
#include <set>

#include "tiles.hpp"

using namespace dsring;

namespace {

bool has_code(const std::vector<Tile>& tiles, const std::string& code) {
  return std::any_of(tiles.begin(), tiles.end(), [&](const Tile& t) { return t.code() == code; });
}

std::set<std::string> codes(const std::vector<Tile>& tiles) {
  std::set<std::string> out;
  for (const auto& t : tiles) out.insert(t.code());
  return out;
}

}  // namespace

TEST_CASE("labels of the tile families") {
  auto cr = make_crossing("R", '0');
  CHECK(cr.west == "R");
  CHECK(cr.east == "R");
  CHECK(cr.north == '0');
  CHECK(cr.south == '0');
  CHECK(cr.code() == "CR(R;0)");

  auto dot = make_dot('Q');
  CHECK(dot.west == "0");
  CHECK(dot.north == '0');
  CHECK(dot.south == 'Q');
  CHECK(dot.east == "Q");
  CHECK(dot.code() == "DOT(Q)");

  auto fu = make_fusor("R1");
  CHECK(fu.west == "R1");
  CHECK(fu.north == '1');
  CHECK(fu.south == '0');
  CHECK(fu.east == "0");

  auto di = make_displacer("R", 'Q');
  CHECK(di.west == "R");
  CHECK(di.north == 'R');
  CHECK(di.south == 'Q');
  CHECK(di.east == "RQ");
  CHECK(di.code() == "DI(R;Q)");
}

TEST_CASE("lower K catalog membership") {
  const auto& k = catalog(Half::Lower, TileMode::K).tiles();
  CHECK(has_code(k, "CR(R;0)"));
  CHECK_FALSE(has_code(k, "CR(1;1)"));
  CHECK_FALSE(has_code(k, "CR(1;R)"));
  CHECK(has_code(k, "DI(R;Q)"));
  CHECK_FALSE(has_code(k, "DI(R1;Q)"));
}

TEST_CASE("strict crossings drop a letter already in the word") {
  const auto& strict = catalog(Half::Lower, TileMode::K, CrossingRule::Strict).tiles();
  const auto& loose = catalog(Half::Lower, TileMode::K, CrossingRule::Loose).tiles();
  CHECK_FALSE(has_code(strict, "CR(R1;1)"));
  CHECK_FALSE(has_code(strict, "CR(RQ;R)"));
  CHECK(has_code(strict, "CR(RQ;0)"));
  CHECK(has_code(strict, "CR(R1;Q)"));
  CHECK(has_code(loose, "CR(R1;1)"));
  CHECK(has_code(loose, "CR(RQ;R)"));
  auto s = codes(strict), l = codes(loose);
  CHECK(std::includes(l.begin(), l.end(), s.begin(), s.end()));
}

TEST_CASE("catalog sizes") {
  CHECK(catalog(Half::Lower, TileMode::H).tiles().size() == 17);
  CHECK(catalog(Half::Lower, TileMode::K, CrossingRule::Strict).tiles().size() == 39);
  CHECK(catalog(Half::Lower, TileMode::K, CrossingRule::Loose).tiles().size() == 53);
  auto n = count_catalog(catalog(Half::Lower, TileMode::K, CrossingRule::Loose));
  CHECK(n.crossings == 34);
  CHECK(n.dots == 4);
  CHECK(n.fusors == 9);
  CHECK(n.displacers == 6);
  auto s = count_catalog(catalog(Half::Lower, TileMode::K, CrossingRule::Strict));
  CHECK(s.crossings == 20);
  CHECK(s.total() == 39);
}

TEST_CASE("mirror examples") {
  auto up = tile_mirror(make_dot('0'));
  CHECK(up.half == Half::Upper);
  CHECK(up.west == "1");
  CHECK(up.east == "1");
  CHECK(up.north == '1');
  CHECK(up.south == '1');
  CHECK(up.is_equivariant());

  auto fu = tile_mirror(make_fusor("R1"));
  CHECK(fu.east == "R0");
  CHECK(fu.north == '0');
  CHECK(fu.south == '1');
  CHECK(fu.west == "1");
  CHECK(fu.code() == "UFU(R1)");
}

TEST_CASE("tile flags") {
  auto f = make_fusor("R1");
  CHECK(f.fusing_letters() == 1);
  CHECK(f.is_weighted_fusor());
  CHECK(f.is_strict());
  auto e = make_fusor("R");
  CHECK(e.fusing_letters() == 0);
  CHECK_FALSE(e.is_weighted_fusor());
  CHECK_FALSE(e.is_strict());
  CHECK(make_dot('0').is_equivariant());
  CHECK_FALSE(make_dot('R').is_equivariant());
  CHECK(make_displacer("R", 'Q').is_strict());
  CHECK(make_displacer("R", 'Q').fusing_letters() == 0);
}

TEST_CASE("lower matches") {
  CHECK(match_lower("0", '0', TileMode::K, false).empty());
  CHECK(codes(match_lower("0", '0', TileMode::K, true)) == std::set<std::string>{"DOT(0)"});
  CHECK(codes(match_lower("R", '0', TileMode::K, false)) == std::set<std::string>{"CR(R;0)", "FU(R)"});
  CHECK(codes(match_lower("R1", '0', TileMode::K, false)) == std::set<std::string>{"CR(R1;0)", "FU(R1)"});
  CHECK(codes(match_lower("R", 'Q', TileMode::H, false)) == std::set<std::string>{"CR(R;Q)"});
  CHECK(codes(match_lower("R", 'Q', TileMode::K, false)) == std::set<std::string>{"CR(R;Q)", "DI(R;Q)"});
  CHECK_THROWS_AS(match_lower("1R", '0', TileMode::K, false), std::invalid_argument);
  CHECK_THROWS_AS(match_lower("R", 'x', TileMode::K, false), std::invalid_argument);
}

TEST_CASE("upper matches") {
  auto eq = match_upper("1", '1', TileMode::H, true);
  CHECK(std::any_of(eq.begin(), eq.end(), [](const Tile& t) { return t.is_equivariant(); }));
  auto no_eq = match_upper("1", '1', TileMode::H, false);
  CHECK(std::none_of(no_eq.begin(), no_eq.end(), [](const Tile& t) { return t.is_equivariant(); }));

  std::set<std::string> mirrored;
  for (const auto& t : match_lower("Q", '0', TileMode::K, false)) mirrored.insert(tile_mirror(t).code());
  CHECK(codes(match_upper("Q", '1', TileMode::K, false)) == mirrored);

  // Mirrors of tiles with a lone 1 on the west carry a lone 0 on the upper side.
  CHECK(codes(match_upper("0", '1', TileMode::H, false)) == std::set<std::string>{"UCR(1;0)", "UFU(1)"});
  CHECK_THROWS_AS(match_upper("0R", '1', TileMode::K, false), std::invalid_argument);

  CHECK(match_upper("R", 'Q', TileMode::H, false).empty());
  CHECK(blocked_upper_crossing(tile_mirror(make_crossing("R", 'Q'))));
  CHECK_FALSE(blocked_upper_crossing(tile_mirror(make_crossing("Q", 'R'))));
  CHECK_FALSE(blocked_upper_crossing(make_crossing("R", 'Q')));
}

TEST_CASE("catalog invariants") {
  for (auto rule : {CrossingRule::Strict, CrossingRule::Loose}) {
    for (auto mode : {TileMode::H, TileMode::K}) {
      const auto& lower = catalog(Half::Lower, mode, rule);
      const auto& upper = catalog(Half::Upper, mode, rule);
      auto blocked = std::count_if(lower.tiles().begin(), lower.tiles().end(),
                                   [](const Tile& t) { return blocked_upper_crossing(tile_mirror(t)); });
      CHECK(blocked == (mode == TileMode::K && rule == CrossingRule::Loose ? 2 : 1));
      CHECK(lower.tiles().size() == upper.tiles().size() + blocked);
      std::set<std::string> upper_codes = codes(upper.tiles());
      for (const auto& t : lower.tiles()) {
        CHECK(tile_mirror(tile_mirror(t)) == t);
        CHECK(upper_codes.count(tile_mirror(t).code()) == (blocked_upper_crossing(tile_mirror(t)) ? 0u : 1u));
        CHECK(has_code(lower.match(t.west, t.south, true), t.code()));
        for (const std::string& w : {t.west, t.east})
          if (w.size() > 1) CHECK(w.find('0') == std::string::npos);
      }
      for (const auto& t : upper.tiles()) {
        CHECK(has_code(upper.match(t.east, t.south, true), t.code()));
        for (const std::string& w : {t.west, t.east})
          if (w.size() > 1) CHECK(w.find('1') == std::string::npos);
      }
    }
    auto h = codes(catalog(Half::Lower, TileMode::H, rule).tiles());
    auto k = codes(catalog(Half::Lower, TileMode::K, rule).tiles());
    CHECK(std::includes(k.begin(), k.end(), h.begin(), h.end()));
  }
}

TEST_CASE("parsing tile codes") {
  CHECK(parse_tile("CR(R;0)") == make_crossing("R", '0'));
  CHECK(parse_tile("UFU(R1)") == tile_mirror(make_fusor("R1")));
  CHECK(parse_tile("DI(R;Q)").east == "RQ");
  CHECK_THROWS_AS(parse_tile("CR(1;1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_tile("XX(R)"), std::invalid_argument);
  for (const auto& t : catalog(Half::Upper, TileMode::K, CrossingRule::Loose).tiles())
    CHECK(parse_tile(t.code()) == t);
}
