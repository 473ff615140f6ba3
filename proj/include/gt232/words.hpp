#ifndef GT232_WORDS_HPP
#define GT232_WORDS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gt232 {

/// Cyclically reduced word x y^{a(1)} x y^{a(2)} ... x y^{a(l)} in
/// Z2 * Z3 = <x,y | x^2 = y^3 = 1>, stored as its exponent sequence.
/// l is the length parameter; the free-product length is 2l.
struct Word {
  std::vector<std::uint8_t> alphas;  // each entry 1 or 2, size() >= 1

  std::size_t length() const { return alphas.size(); }
  bool operator==(const Word&) const = default;
};

enum class BlockType : std::uint8_t { XY, XY2 };

/// Lengths of the maximal (xy)^b / (xy^2)^b blocks of a word, read
/// cyclically.  The number of blocks is 1 or even.  firstType records
/// the type of block 1; it is dropped under canonical equivalence.
struct BlockList {
  std::vector<int> lengths;
  BlockType firstType = BlockType::XY;
  bool operator==(const BlockList&) const = default;
};

/// Cyclic syllable interval [start..end]; indices reduce modulo the word
/// length.  Denotes the subword x y^{a(start)} ... x y^{a(end)}.
struct Interval {
  int start = 0;
  int end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses the grammar  expr := term+ ; term := atom ('^' uint)? ;
/// atom := 'x' | 'y' | '(' expr ')',  free-reduces with x^2 = y^3 = 1 and
/// cyclic reduction, and requires the result to be an alternating word
/// x y^a x y^a ... (up to starting the cycle at an x).
Word parse_word(const std::string& text);

/// Compressed form with maximal blocks written as powers, e.g.
/// "(xy)^2xy^2".  parse_word(print_word(w)) == w.
std::string print_word(const Word& w);

/// Maximal cyclic runs of equal exponents.  If position 0 is not a run
/// boundary the cycle is read from the first boundary after it.
BlockList to_blocks(const Word& w);

/// Inverse of to_blocks; requires t == 1 or t even.
Word from_blocks(const BlockList& b);

/// Cyclic normalization of w^{-1}: the exponent sequence reversed with
/// a -> 3-a.
Word invert(const Word& w);

/// Lexicographically least sequence over all rotations of `lengths` and of
/// its reversal.
std::vector<int> canonical_lengths(const std::vector<int>& lengths);

/// canonical_lengths on the length list; firstType is dropped (the result
/// is XY by convention).
BlockList canonicalize(const BlockList& b);

/// (exponent sum of x, exponent sum of y) = (l, sum of a(j)).
std::pair<long long, long long> exponent_sums(const Word& w);

/// True iff the x-sum is odd and the y-sum is divisible by 3 (existence of
/// an essential representation onto a cyclic group).
bool has_essential_cyclic_rep(const Word& w);

/// Extracts the cyclic interval as a linear syllable sequence.
Word subword(const Word& w, Interval iv);

/// Parses "I..J" (or "[I..J]") with hexadecimal indices, reduced mod l.
Interval parse_interval(const std::string& text, std::size_t word_length);
std::string format_interval(Interval iv);

/// Parses "[b1,b2,...,bt]" (comma-separated decimal lengths).
BlockList parse_block_list(const std::string& text);
std::string format_lengths(const std::vector<int>& lengths);

/// True iff b is a rotation of a (as exponent sequences).
bool cyclically_equal(const Word& a, const Word& b);

}  // namespace gt232

#endif
