#ifndef GT232_SMALLCANCEL_HPP
#define GT232_SMALLCANCEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gt232/words.hpp"

namespace gt232 {

/// For every syllable-aligned cyclic subword U of W^{±1}: the set of
/// distinct completions V (as reduced syllable sequences) with U·V a cyclic
/// permutation of W or W^{-1}, cyclically reduced as written.  U is a piece
/// iff its completion set has at least 2 elements.
class PieceIndex {
 public:
  explicit PieceIndex(const Word& w);

  const Word& word() const { return word_; }
  /// Completion count of the subword at the interval (0 when it does not
  /// occur, which cannot happen for intervals of the indexed word).
  std::size_t completion_count(const Word& u) const;
  bool is_piece(Interval iv) const;

 private:
  Word word_;
  // key: exponent sequence of the subword; value: distinct completions.
  std::map<std::string, std::set<std::string>> completions_;
};

PieceIndex build_piece_index(const Word& w);
bool is_piece(const Word& w, Interval iv);

/// Consecutive intervals partitioning a cyclic conjugate of a word.
struct Decomposition {
  std::vector<Interval> factors;
};

struct DecompositionCheckOptions {
  int factor_count = 3;
  int min_length = 8;   // free-product length (2x the syllable pair count)
  bool require_even = true;
};

struct DecompositionCheck {
  bool pass = false;
  std::vector<std::string> reasons;  // empty iff pass
};

/// Checks that the factors tile a cyclic conjugate of w exactly once, that
/// each factor is a non-piece, and the count/length/evenness constraints.
DecompositionCheck verify_decomposition(const Word& w, const Decomposition& d,
                                        const DecompositionCheckOptions& opts = {});

/// First decomposition of w into k non-pieces of even length >= min_length,
/// scanning starting rotations ascending and cut tuples lexicographically;
/// nullopt when none exists.
std::optional<Decomposition> find_decomposition(const Word& w, int k,
                                                int min_length, bool even);

/// Table-2 style rendering: "[(xy)^4]·[...]·[...]".
std::string format_decomposition(const Word& w, const Decomposition& d);

struct Table2Check {
  int row = 0;
  bool pass = false;
  std::string detail;
};

/// Checks each bundled factorization: the factors verify as a decomposition
/// and their product is a cyclic permutation of the catalogue word.
std::vector<Table2Check> verify_table2();

}  // namespace gt232

#endif
