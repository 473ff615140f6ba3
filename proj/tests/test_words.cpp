#include <doctest.h>

#include <random>
#include <set>

#include "gt232/words.hpp"
#include "oracles.hpp"

using namespace gt232;

namespace {
Word W(std::initializer_list<int> alphas) {
  Word w;
  for (int a : alphas) w.alphas.push_back(static_cast<std::uint8_t>(a));
  return w;
}
}  // namespace

TEST_CASE("parse_word") {
  CHECK(parse_word("(xy)^2xy^2xyxy^2") == W({1, 1, 2, 1, 2}));
  CHECK(parse_word("xy") == W({1}));
  CHECK(parse_word("xy^2") == W({2}));
  CHECK(parse_word("yx") == W({1}));  // rotated to x-first form
  CHECK(parse_word("((xy)^2xy^2)^1") == W({1, 1, 2}));
  CHECK(parse_word("x(y)") == W({1}));
  CHECK(parse_word("xy^5") == W({2}));  // y^5 = y^2

  CHECK_THROWS_AS(parse_word("xyyx"), ParseError);   // collapses to y^2
  CHECK_THROWS_AS(parse_word("xx"), ParseError);     // empty word
  CHECK_THROWS_AS(parse_word("xyx"), ParseError);    // single y after reduction
  CHECK_THROWS_AS(parse_word("xy^"), ParseError);
  CHECK_THROWS_AS(parse_word("(xy"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("xy^0"), ParseError);
  CHECK_THROWS_AS(parse_word("x&y"), ParseError);

  try {
    parse_word("xy&z");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("print_word") {
  CHECK(print_word(W({1, 1, 2})) == "(xy)^2xy^2");
  CHECK(print_word(W({1})) == "xy");
  CHECK(print_word(W({1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2})) ==
        "(xy)^4(xy^2)^3(xy)^2(xy^2)^2");
  CHECK(print_word(W({2})) == "xy^2");
}

TEST_CASE("parse/print round trip") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Word w = oracles::random_word(rng, 1, 30);
    CHECK(parse_word(print_word(w)) == w);
  }
}

TEST_CASE("to_blocks") {
  CHECK(to_blocks(W({1, 1, 2, 1, 2})) ==
        BlockList{{2, 1, 1, 1}, BlockType::XY});
  CHECK(to_blocks(W({2, 2, 2})) == BlockList{{3}, BlockType::XY2});
  CHECK(to_blocks(W({1, 2})) == BlockList{{1, 1}, BlockType::XY});
  // Position 0 inside a cyclic block: the cycle is read from the boundary.
  CHECK(to_blocks(W({1, 2, 1})) == BlockList{{1, 2}, BlockType::XY2});
}

TEST_CASE("from_blocks") {
  CHECK(from_blocks({{2, 1, 1, 1}, BlockType::XY}) == W({1, 1, 2, 1, 2}));
  CHECK(from_blocks({{3}, BlockType::XY}) == W({1, 1, 1}));
  CHECK_THROWS_AS(from_blocks({{1, 2, 1}, BlockType::XY}),
                  std::invalid_argument);
}

TEST_CASE("block round trips") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    Word w = oracles::random_word(rng, 1, 24);
    BlockList b = to_blocks(w);
    // t is 1 or even
    CHECK((b.lengths.size() == 1 || b.lengths.size() % 2 == 0));
    Word back = from_blocks(b);
    CHECK(cyclically_equal(back, w));
    // exact identity whenever position 0 starts a block
    if (w.alphas[0] != w.alphas[w.length() - 1] || b.lengths.size() == 1)
      CHECK(back == w);
    // from_blocks output always starts at a boundary
    CHECK(from_blocks(to_blocks(back)) == back);
  }
}

TEST_CASE("invert") {
  CHECK(invert(W({1, 1, 2})) == W({1, 2, 2}));
  CHECK(invert(W({1})) == W({2}));
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    Word w = oracles::random_word(rng, 1, 30);
    CHECK(invert(invert(w)) == w);
    // block list of the inverse is the reversed list up to rotation
    auto a = canonical_lengths(to_blocks(w).lengths);
    auto b = canonical_lengths(to_blocks(invert(w)).lengths);
    CHECK(a == b);
  }
}

TEST_CASE("canonicalize") {
  // the reversal [1,1,2,2,3,4] beats every rotation of the original
  CHECK(canonical_lengths({4, 3, 2, 2, 1, 1}) ==
        std::vector<int>{1, 1, 2, 2, 3, 4});
  CHECK(canonical_lengths({1}) == std::vector<int>{1});

  // constant on the dihedral orbit of [2,1,1,1]
  std::vector<int> base{2, 1, 1, 1};
  auto expect = canonical_lengths(base);
  for (std::size_t r = 0; r < base.size(); ++r) {
    std::vector<int> rot, rrev;
    for (std::size_t i = 0; i < base.size(); ++i)
      rot.push_back(base[(r + i) % base.size()]);
    rrev.assign(rot.rbegin(), rot.rend());
    CHECK(canonical_lengths(rot) == expect);
    CHECK(canonical_lengths(rrev) == expect);
  }
}

TEST_CASE("canonicalize exhaustive: idempotent and orbit-constant") {
  // all lists with t <= 8 over {1,2,3}
  for (int t = 1; t <= 8; ++t) {
    int total = 1;
    for (int i = 0; i < t; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<int> v(t);
      int c = code;
      for (int i = 0; i < t; ++i) {
        v[i] = 1 + c % 3;
        c /= 3;
      }
      auto canon = canonical_lengths(v);
      CHECK(canonical_lengths(canon) == canon);
      // every rotation/reflection maps to the same representative
      std::vector<int> rot(t);
      for (int r = 0; r < t; ++r) {
        for (int i = 0; i < t; ++i) rot[i] = v[(r + i) % t];
        if (canonical_lengths(rot) != canon) {
          CHECK(canonical_lengths(rot) == canon);
          return;
        }
        std::vector<int> rev(rot.rbegin(), rot.rend());
        if (canonical_lengths(rev) != canon) {
          CHECK(canonical_lengths(rev) == canon);
          return;
        }
      }
    }
  }
}

TEST_CASE("exponent_sums and essential cyclic representations") {
  Word w20 = parse_word("(xy)^4(xy^2)^3(xy)^2(xy^2)^2");
  CHECK(exponent_sums(w20) == std::pair<long long, long long>{11, 16});
  CHECK(exponent_sums(W({1})) == std::pair<long long, long long>{1, 1});
  CHECK(exponent_sums(W({2})) == std::pair<long long, long long>{1, 2});

  CHECK_FALSE(has_essential_cyclic_rep(w20));  // 16 not divisible by 3
  CHECK(has_essential_cyclic_rep(W({1, 1, 1})));
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    Word w = oracles::random_word(rng, 2, 30);
    if (w.length() % 2 == 0) CHECK_FALSE(has_essential_cyclic_rep(w));
  }
}

TEST_CASE("subword and intervals") {
  // the almost-small-cancellation word in its hexadecimal indexing
  Word w13 = W({1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2});
  CHECK(subword(w13, parse_interval("7..B", 13)) == W({2, 2, 1, 1, 2}));
  CHECK(subword(w13, parse_interval("0..0", 13)) == W({1}));
  CHECK(subword(w13, parse_interval("C..0", 13)) == W({2, 1}));
  CHECK(subword(w13, parse_interval("[A..1]", 13)) == W({1, 2, 2, 1, 2}));
  CHECK(format_interval({7, 11}) == "[7..B]");
  CHECK_THROWS_AS(parse_interval("7.B", 13), ParseError);
  CHECK_THROWS_AS(parse_interval("..", 13), ParseError);
}

TEST_CASE("block list text form") {
  BlockList b = parse_block_list("[2,1,1,1]");
  CHECK(b.lengths == std::vector<int>{2, 1, 1, 1});
  CHECK(b.firstType == BlockType::XY);
  CHECK(format_lengths(b.lengths) == "[2,1,1,1]");
  CHECK_THROWS_AS(parse_block_list("[2,1,"), ParseError);
  CHECK_THROWS_AS(parse_block_list("2,1"), ParseError);
  CHECK_THROWS_AS(parse_block_list("[0]"), ParseError);
}
