#ifndef GT232_SEARCH_HPP
#define GT232_SEARCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gt232/polys.hpp"
#include "gt232/trace.hpp"
#include "gt232/words.hpp"

namespace gt232 {

/// Lexicographic stream of compositions of `total` into `parts` positive
/// integers (the L input of the search).
class CompositionStream {
 public:
  CompositionStream(int total, int parts);
  /// Copies the current composition and advances; false when exhausted.
  bool next(std::vector<int>& out);

  static std::uint64_t count(int total, int parts);
  /// rank-th composition in lexicographic order, 0-based.
  static std::vector<int> unrank(int total, int parts, std::uint64_t rank);

 private:
  std::vector<int> cur_;
  bool done_ = false;
};

/// Colexicographic stream of the size-k subsets of {1,...,m} (the C input).
class SubsetStream {
 public:
  SubsetStream(int m, int k);
  bool next(std::vector<int>& out);

  static std::uint64_t count(int m, int k);

 private:
  std::vector<int> cur_;  // ascending, 1-based
  int m_;
  bool done_ = false;
};

std::uint64_t binomial(int n, int k);

/// Block list of length 2e+2 with 1s at the positions C and the values
/// L[i]+1 filling the remaining positions in order.
std::vector<int> assemble(const std::vector<int>& L, const std::vector<int>& C,
                          int c, int e);

enum class ScreenMode { Float, Exact, None };

struct SearchParams {
  int c = 0;
  int e = 0;
  int workers = 1;
  ScreenMode screen = ScreenMode::Exact;
  double tolerance = 1e-6;  // float mode only
  bool force = false;       // allow (c,e) outside the admissible region
  bool huge_ok = false;     // required for length parameter > 33
  std::string checkpoint_path;                    // huge searches only
  std::uint64_t checkpoint_stride = 10'000'000;   // candidates per checkpoint
  std::uint64_t max_l_slices = 0;  // stop after N checkpointed chunks (0 = all)

  int length() const { return 1 + 2 * c + 4 * e; }
};

/// Cheap necessary test for tau == target on a candidate block list.
/// Exact mode compares tau and target at λ = 3 in wraparound integer
/// arithmetic and evaluates tau in Z[sqrt(2)] (when c > 0) and Z[phi]
/// (when e > 0), demanding exact zeros; it never rejects a true match.
/// Float mode checks |tau - target| <= tolerance at sqrt(2), phi and a
/// generic point.  None passes everything.
bool screen_candidate(const std::vector<int>& lengths, const SearchParams& p);

struct SearchHit {
  std::vector<int> blocks;  // canonical block list
  std::string word;
  IntPoly tau;
  bool operator==(const SearchHit& o) const {
    return blocks == o.blocks && word == o.word && tau == o.tau;
  }
};

struct SearchReport {
  SearchParams params;
  std::vector<SearchHit> hits;  // sorted lexicographically by blocks
  std::uint64_t raw_count = 0;        // (L,C) pairs enumerated
  std::uint64_t canonical_count = 0;  // candidates equal to their canonical form
  std::uint64_t screened_count = 0;   // canonical candidates passing the screen
  std::uint64_t exact_checked_count = 0;  // full polynomial comparisons
  double wall_seconds = 0.0;

  bool same_outcome(const SearchReport& o) const {
    return hits == o.hits && raw_count == o.raw_count &&
           canonical_count == o.canonical_count;
  }
};

/// Exhaustive search over the (L,C) inputs with canonical deduplication
/// (each dihedral class is tested once, at its lexicographically least
/// representative).  Output is independent of the worker count.
SearchReport run_search(const SearchParams& params);

/// Single-threaded reference implementation: the plain double loop with no
/// bulk skipping, kept for testing the parallel kernel against.
SearchReport run_search_serial(const SearchParams& params);

/// run_search for every admissible (c,e) with 1+2c+4e <= max_len, ordered
/// by (length, c).
std::vector<SearchReport> search_all(int max_len, const SearchParams& base);

/// Header line with params and counters, then one hit per line
/// "c,e,[blocks],word,tau-coefficients".
void write_report(std::ostream& os, const SearchReport& report,
                  bool include_timing);

struct RowCheck {
  int row = 0;
  bool pass = false;
  std::string detail;
};

/// Per-row check that the catalogue words have the stated trace polynomial
/// and the block statistics it forces (2e+2 blocks, c+e of length > 1).
std::vector<RowCheck> verify_table1();

}  // namespace gt232

#endif
