#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "gt232/search.hpp"
#include "gt232/tables.hpp"
#include "oracles.hpp"

using namespace gt232;

namespace {

std::set<std::vector<int>> hit_blocks(const SearchReport& r) {
  std::set<std::vector<int>> out;
  for (const SearchHit& h : r.hits) out.insert(h.blocks);
  return out;
}

std::set<std::vector<int>> expected_hits(int c, int e) {
  std::set<std::vector<int>> out;
  for (const CatalogueRow& row : table1())
    if (row.c == c && row.e == e)
      out.insert(canonical_lengths(to_blocks(parse_word(row.word)).lengths));
  return out;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(26, 13) == 10400600);
  CHECK(binomial(22, 8) == 319770);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 5) == 0);
}

TEST_CASE("composition stream") {
  CHECK(CompositionStream::count(1, 1) == 1);
  CHECK(CompositionStream::count(3, 2) == 2);
  CHECK(CompositionStream::count(27, 14) == binomial(26, 13));

  CompositionStream s(5, 3);
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  while (s.next(cur)) all.push_back(cur);
  std::vector<std::vector<int>> want = {{1, 1, 3}, {1, 2, 2}, {1, 3, 1},
                                        {2, 1, 2}, {2, 2, 1}, {3, 1, 1}};
  CHECK(all == want);  // lexicographic
  for (std::uint64_t r = 0; r < all.size(); ++r)
    CHECK(CompositionStream::unrank(5, 3, r) == all[r]);
  CHECK_THROWS_AS(CompositionStream::unrank(5, 3, 6), std::out_of_range);

  CompositionStream one(1, 1);
  REQUIRE(one.next(cur));
  CHECK(cur == std::vector<int>{1});
  CHECK_FALSE(one.next(cur));
}

TEST_CASE("subset stream") {
  SubsetStream s(2, 1);
  std::vector<std::vector<int>> all;
  std::vector<int> cur;
  while (s.next(cur)) all.push_back(cur);
  CHECK(all == std::vector<std::vector<int>>{{1}, {2}});

  SubsetStream colex(4, 2);
  all.clear();
  while (colex.next(cur)) all.push_back(cur);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 3}, {2, 3},
                                        {1, 4}, {2, 4}, {3, 4}};
  CHECK(all == want);  // colexicographic

  SubsetStream empty(6, 0);
  REQUIRE(empty.next(cur));
  CHECK(cur.empty());
  CHECK_FALSE(empty.next(cur));

  SubsetStream none(2, 3);
  CHECK_FALSE(none.next(cur));
  CHECK(SubsetStream::count(14, 5) == binomial(14, 5));
}

TEST_CASE("assemble") {
  CHECK(assemble({1}, {2}, 1, 0) == std::vector<int>{2, 1});
  CHECK(assemble({2, 1}, {2, 4}, 1, 1) == std::vector<int>{3, 1, 2, 1});
  CHECK_THROWS_AS(assemble({}, {}, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(assemble({1}, {5}, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(assemble({1}, {1, 1}, 1, 1), std::invalid_argument);
}

TEST_CASE("screen_candidate") {
  SearchParams p10;
  p10.c = 1;
  p10.e = 0;
  for (ScreenMode m : {ScreenMode::Exact, ScreenMode::Float, ScreenMode::None}) {
    p10.screen = m;
    CHECK(screen_candidate({2, 1}, p10));  // tau = λ(λ^2-2) vanishes at sqrt2
  }

  SearchParams p01;
  p01.c = 0;
  p01.e = 1;
  p01.screen = ScreenMode::Exact;
  CHECK_FALSE(screen_candidate({1, 1, 1, 1}, p01));  // tau(φ) = φ-1 != 0
  p01.screen = ScreenMode::Float;
  CHECK_FALSE(screen_candidate({1, 1, 1, 1}, p01));
  p01.screen = ScreenMode::None;
  CHECK(screen_candidate({1, 1, 1, 1}, p01));
}

TEST_CASE("exact screen never rejects a true match and is sound") {
  // true matches: dihedral transforms of catalogue words must all survive
  for (const CatalogueRow& row : table1()) {
    if (row.c + row.e == 0) continue;
    SearchParams p;
    p.c = row.c;
    p.e = row.e;
    p.screen = ScreenMode::Exact;
    std::vector<int> lengths = to_blocks(parse_word(row.word)).lengths;
    std::size_t t = lengths.size();
    for (std::size_t r = 0; r < t; ++r) {
      std::vector<int> rot;
      for (std::size_t i = 0; i < t; ++i) rot.push_back(lengths[(r + i) % t]);
      CHECK(screen_candidate(rot, p));
      std::vector<int> rev(rot.rbegin(), rot.rend());
      CHECK(screen_candidate(rev, p));
    }
  }

  // soundness: survivors do have the claimed exact roots
  std::mt19937 rng(47);
  int survivors = 0;
  for (int iter = 0; iter < 400; ++iter) {
    int t = 2 * (1 + static_cast<int>(rng() % 7));
    std::vector<int> lengths(t);
    for (int& v : lengths) v = 1 + static_cast<int>(rng() % 4);

    SearchParams p;
    p.c = 1;
    p.e = 1;
    p.screen = ScreenMode::Exact;
    if (!screen_candidate(lengths, p)) continue;
    ++survivors;
    IntPoly tau = trace_poly(from_blocks({lengths, BlockType::XY}));
    CHECK(poly_eval_quad(tau, QuadOrderElem{0, 1, 0, 2}).is_zero());
    CHECK(poly_eval_quad(tau, QuadOrderElem{0, 1, 1, 1}).is_zero());
  }
  // random candidates essentially never match a fixed target
  CHECK(survivors <= 2);
}

TEST_CASE("run_search small parameter pairs") {
  SearchParams p;
  p.c = 0;
  p.e = 0;
  SearchReport r = run_search(p);
  REQUIRE(r.hits.size() == 1);
  CHECK(r.hits[0].blocks == std::vector<int>{1});
  CHECK(r.hits[0].word == "xy");

  p.c = 1;
  p.e = 2;
  r = run_search(p);
  CHECK(r.hits.size() == 2);
  CHECK(hit_blocks(r) == expected_hits(1, 2));

  p.c = 2;
  p.e = 3;
  r = run_search(p);
  CHECK(r.hits.size() == 3);
  CHECK(hit_blocks(r) == expected_hits(2, 3));

  // admissible pair absent from the catalogue
  p.c = 4;
  p.e = 2;
  r = run_search(p);
  CHECK(r.hits.empty());

  // outside the admissible region: rejected unless forced, then empty
  p.c = 3;
  p.e = 0;
  CHECK_THROWS_AS(run_search(p), std::invalid_argument);
  p.force = true;
  r = run_search(p);
  CHECK(r.hits.empty());
  CHECK(r.raw_count == 0);  // e+2-c < 0: no candidates exist

  SearchParams big;
  big.c = 4;
  big.e = 10;
  CHECK_THROWS_AS(run_search(big), std::invalid_argument);  // needs huge tier
}

TEST_CASE("hit structure invariants") {
  for (auto [c, e] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{2, 2}}) {
    SearchParams p;
    p.c = c;
    p.e = e;
    SearchReport r = run_search(p);
    std::set<std::vector<int>> seen;
    for (const SearchHit& h : r.hits) {
      CHECK(static_cast<int>(h.blocks.size()) == 2 * e + 2);
      CHECK(std::count_if(h.blocks.begin(), h.blocks.end(),
                          [](int v) { return v > 1; }) == c + e);
      int sum = 0;
      for (int v : h.blocks) sum += v;
      CHECK(sum == 1 + 2 * c + 4 * e);
      CHECK(h.blocks == canonical_lengths(h.blocks));
      CHECK(seen.insert(canonical_lengths(h.blocks)).second);  // no dihedral dupes
      CHECK(h.tau == target_poly(c, e));
    }
    CHECK(std::is_sorted(r.hits.begin(), r.hits.end(),
                         [](const SearchHit& a, const SearchHit& b) {
                           return a.blocks < b.blocks;
                         }));
  }
}

TEST_CASE("parallel kernel matches the serial reference") {
  for (auto [c, e] : {std::pair{0, 1}, std::pair{2, 0}, std::pair{1, 1},
                      std::pair{1, 2}, std::pair{3, 1}, std::pair{2, 3}}) {
    SearchParams p;
    p.c = c;
    p.e = e;
    p.workers = 4;
    SearchReport par = run_search(p);
    p.workers = 1;
    SearchReport ser = run_search_serial(p);
    CHECK(par.hits == ser.hits);
    CHECK(par.raw_count == ser.raw_count);
    CHECK(par.canonical_count == ser.canonical_count);
    CHECK(par.screened_count == ser.screened_count);
    CHECK(par.exact_checked_count == ser.exact_checked_count);
  }
}

TEST_CASE("determinism across workers and screen modes") {
  for (auto [c, e] : {std::pair{1, 2}, std::pair{2, 2}, std::pair{3, 2}}) {
    SearchParams p;
    p.c = c;
    p.e = e;
    p.screen = ScreenMode::Exact;
    p.workers = 1;
    SearchReport base = run_search(p);
    for (int workers : {2, 8}) {
      p.workers = workers;
      SearchReport r = run_search(p);
      CHECK(r.hits == base.hits);
      CHECK(r.raw_count == base.raw_count);
      CHECK(r.canonical_count == base.canonical_count);
      CHECK(r.screened_count == base.screened_count);
      CHECK(r.exact_checked_count == base.exact_checked_count);
    }
    for (ScreenMode m : {ScreenMode::None, ScreenMode::Float}) {
      p.screen = m;
      p.workers = 3;
      SearchReport r = run_search(p);
      CHECK(r.hits == base.hits);
      CHECK(r.raw_count == base.raw_count);
      CHECK(r.canonical_count == base.canonical_count);
    }
  }
}

TEST_CASE("naive full alpha-space enumerator agrees") {
  for (auto [c, e] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1},
                      std::pair{2, 0}, std::pair{1, 1}, std::pair{2, 1},
                      std::pair{1, 2}}) {
    SearchParams p;
    p.c = c;
    p.e = e;
    CHECK(hit_blocks(run_search(p)) == oracles::naive_search(c, e));
  }
}

TEST_CASE("search_all") {
  SearchParams base;
  auto reports = search_all(7, base);
  REQUIRE(reports.size() == 5);
  std::vector<std::pair<int, int>> pairs;
  for (const SearchReport& r : reports) pairs.emplace_back(r.params.c, r.params.e);
  CHECK(pairs == std::vector<std::pair<int, int>>{
                     {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}});

  auto tiny = search_all(3, base);
  REQUIRE(tiny.size() == 2);
  CHECK(tiny[0].hits.size() == 1);
  CHECK(tiny[0].hits[0].word == "xy");
  CHECK(tiny[1].hits.size() == 1);
  CHECK(tiny[1].hits[0].blocks == std::vector<int>{1, 2});
}

TEST_CASE("report format") {
  SearchParams p;
  p.c = 1;
  p.e = 2;
  SearchReport r = run_search(p);
  std::ostringstream os;
  write_report(os, r, false);
  std::istringstream is(os.str());
  std::string line;
  REQUIRE(std::getline(is, line));
  CHECK(line.rfind("# search c=1 e=2 l=11 workers=1 screen=exact raw=", 0) == 0);
  int hit_lines = 0;
  while (std::getline(is, line)) {
    CHECK(line.rfind("1,2,[", 0) == 0);
    CHECK(line.find("],xy") + line.find("],(xy") != 2 * std::string::npos);
    CHECK(line.find(",[0,") != std::string::npos);  // odd tau: zero constant
    ++hit_lines;
  }
  CHECK(hit_lines == 2);

  std::ostringstream timed;
  write_report(timed, r, true);
  CHECK(timed.str().find("# wall_seconds=") != std::string::npos);
  CHECK(os.str().find("wall_seconds") == std::string::npos);
}

TEST_CASE("checkpointing and resume") {
  namespace fs = std::filesystem;
  fs::path ckpt = fs::temp_directory_path() / "gt232_test_search.ckpt";
  std::error_code ec;
  fs::remove(ckpt, ec);

  SearchParams p;
  p.c = 2;
  p.e = 2;  // raw 3136 candidates
  SearchReport plain = run_search(p);

  p.huge_ok = true;  // enables checkpointing (length is small, allowed)
  p.checkpoint_path = ckpt.string();
  p.checkpoint_stride = 200;  // several chunks
  SearchReport chunked = run_search(p);
  CHECK(chunked.hits == plain.hits);
  CHECK(chunked.raw_count == plain.raw_count);
  CHECK(fs::exists(ckpt));

  // completed checkpoint: resuming does no more work and returns the totals
  SearchReport resumed = run_search(p);
  CHECK(resumed.hits == plain.hits);
  CHECK(resumed.raw_count == plain.raw_count);
  CHECK(resumed.canonical_count == plain.canonical_count);
  CHECK(resumed.screened_count == plain.screened_count);

  // a checkpoint for different parameters is rejected
  SearchParams other = p;
  other.c = 1;
  other.e = 2;
  CHECK_THROWS_AS(run_search(other), std::runtime_error);
  fs::remove(ckpt, ec);
}

TEST_CASE("mid-run checkpoint resume reproduces the uninterrupted report") {
  namespace fs = std::filesystem;
  fs::path ckpt = fs::temp_directory_path() / "gt232_test_resume.ckpt";
  std::error_code ec;
  fs::remove(ckpt, ec);

  SearchParams p;
  p.c = 1;
  p.e = 3;
  SearchReport plain = run_search(p);

  p.huge_ok = true;
  p.checkpoint_path = ckpt.string();
  p.checkpoint_stride = 120;
  p.max_l_slices = 2;  // stop after two chunks
  SearchReport partial = run_search(p);
  CHECK(partial.raw_count < plain.raw_count);

  p.max_l_slices = 0;  // finish the run from the checkpoint
  SearchReport finished = run_search(p);
  CHECK(finished.hits == plain.hits);
  CHECK(finished.raw_count == plain.raw_count);
  CHECK(finished.canonical_count == plain.canonical_count);
  CHECK(finished.screened_count == plain.screened_count);
  CHECK(finished.exact_checked_count == plain.exact_checked_count);
  fs::remove(ckpt, ec);
}
