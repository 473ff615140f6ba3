#include "gt232/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gt232 {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
      pos_(pos) {}

namespace {

struct Syllable {
  char gen;       // 'x' or 'y'
  int exp;        // 1 for x; 1 or 2 for y (after reduction)
};

constexpr std::size_t kMaxSyllables = 1u << 20;

class WordParser {
 public:
  explicit WordParser(const std::string& text) : text_(text) {}

  std::vector<Syllable> run() {
    std::vector<Syllable> out;
    parse_expr(out, 0);
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return out;
  }

 private:
  void push(std::vector<Syllable>& out, char gen, long long exp) {
    int m = gen == 'x' ? 2 : 3;
    int e = static_cast<int>(exp % m);
    if (e == 0) return;
    if (!out.empty() && out.back().gen == gen) {
      out.back().exp = (out.back().exp + e) % m;
      if (out.back().exp == 0) out.pop_back();
      return;
    }
    if (out.size() >= kMaxSyllables) throw ParseError("word too long", pos_);
    out.push_back({gen, e});
  }

  void parse_expr(std::vector<Syllable>& out, int depth) {
    bool any = false;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == ')') break;
      if (ch == 'x' || ch == 'y') {
        ++pos_;
        push(out, ch, parse_power());
      } else if (ch == '(') {
        std::size_t open = pos_++;
        std::vector<Syllable> group;
        parse_expr(group, depth + 1);
        if (pos_ >= text_.size() || text_[pos_] != ')')
          throw ParseError("unbalanced '('", open);
        ++pos_;
        long long k = parse_power();
        if (group.size() * static_cast<unsigned long long>(k) > kMaxSyllables)
          throw ParseError("exponent too large", open);
        for (long long i = 0; i < k; ++i)
          for (const Syllable& s : group) push(out, s.gen, s.exp);
      } else {
        throw ParseError("expected 'x', 'y' or '('", pos_);
      }
      any = true;
    }
    if (!any) throw ParseError("empty expression", pos_);
  }

  long long parse_power() {
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    std::size_t caret = pos_++;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected exponent after '^'", pos_);
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > static_cast<long long>(kMaxSyllables))
        throw ParseError("exponent too large", caret);
      ++pos_;
    }
    if (v < 1) throw ParseError("exponent must be >= 1", caret);
    return v;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text) {
  std::vector<Syllable> syl = WordParser(text).run();

  // Cyclic reduction: merge equal generators across the seam.
  while (syl.size() >= 2 && syl.front().gen == syl.back().gen) {
    int m = syl.front().gen == 'x' ? 2 : 3;
    syl.front().exp = (syl.front().exp + syl.back().exp) % m;
    syl.pop_back();
    if (syl.front().exp == 0) syl.erase(syl.begin());
  }
  if (syl.empty()) throw ParseError("word reduces to the empty word", text.size());
  if (syl.size() % 2 != 0)
    throw ParseError("word is not of alternating x/y form after reduction",
                     text.size());
  // Free reduction already merged adjacent equal generators, so the sequence
  // alternates; rotate to start with x.
  if (syl.front().gen == 'y') {
    syl.insert(syl.begin(), syl.back());
    syl.pop_back();
  }
  Word w;
  w.alphas.reserve(syl.size() / 2);
  for (std::size_t i = 0; i < syl.size(); i += 2) {
    if (syl[i].gen != 'x' || syl[i + 1].gen != 'y')
      throw ParseError("word is not of alternating x/y form after reduction",
                       text.size());
    w.alphas.push_back(static_cast<std::uint8_t>(syl[i + 1].exp));
  }
  return w;
}

std::string print_word(const Word& w) {
  std::ostringstream os;
  std::size_t l = w.length();
  for (std::size_t i = 0; i < l;) {
    std::size_t j = i;
    while (j < l && w.alphas[j] == w.alphas[i]) ++j;
    std::size_t run = j - i;
    const char* unit = w.alphas[i] == 1 ? "xy" : "xy^2";
    if (run == 1) {
      os << unit;
    } else {
      os << '(' << unit << ")^" << run;
    }
    i = j;
  }
  return os.str();
}

BlockList to_blocks(const Word& w) {
  std::size_t l = w.length();
  std::size_t start = l;  // first cyclic run boundary at or after 0
  for (std::size_t i = 0; i < l; ++i) {
    if (w.alphas[(i + l - 1) % l] != w.alphas[i]) {
      start = i;
      break;
    }
  }
  BlockList b;
  if (start == l) {  // single block
    b.lengths.push_back(static_cast<int>(l));
    b.firstType = w.alphas[0] == 1 ? BlockType::XY : BlockType::XY2;
    return b;
  }
  b.firstType = w.alphas[start] == 1 ? BlockType::XY : BlockType::XY2;
  std::size_t i = 0;
  while (i < l) {
    std::uint8_t a = w.alphas[(start + i) % l];
    std::size_t j = i;
    while (j < l && w.alphas[(start + j) % l] == a) ++j;
    b.lengths.push_back(static_cast<int>(j - i));
    i = j;
  }
  return b;
}

Word from_blocks(const BlockList& b) {
  std::size_t t = b.lengths.size();
  if (t == 0) throw std::invalid_argument("from_blocks: empty block list");
  if (t != 1 && t % 2 != 0)
    throw std::invalid_argument(
        "from_blocks: block count must be 1 or even, got " + std::to_string(t));
  Word w;
  std::uint8_t a = b.firstType == BlockType::XY ? 1 : 2;
  for (int len : b.lengths) {
    if (len < 1) throw std::invalid_argument("from_blocks: block length < 1");
    for (int i = 0; i < len; ++i) w.alphas.push_back(a);
    a = static_cast<std::uint8_t>(3 - a);
  }
  return w;
}

Word invert(const Word& w) {
  Word r;
  r.alphas.reserve(w.length());
  for (auto it = w.alphas.rbegin(); it != w.alphas.rend(); ++it)
    r.alphas.push_back(static_cast<std::uint8_t>(3 - *it));
  return r;
}

std::vector<int> canonical_lengths(const std::vector<int>& lengths) {
  std::size_t t = lengths.size();
  if (t <= 1) return lengths;
  std::vector<int> best = lengths;
  std::vector<int> rot(t);
  const std::vector<int> rev(lengths.rbegin(), lengths.rend());
  const std::vector<int>* bases[2] = {&lengths, &rev};
  for (const std::vector<int>* base : bases) {
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t i = 0; i < t; ++i) rot[i] = (*base)[(r + i) % t];
      if (rot < best) best = rot;
    }
  }
  return best;
}

BlockList canonicalize(const BlockList& b) {
  return BlockList{canonical_lengths(b.lengths), BlockType::XY};
}

std::pair<long long, long long> exponent_sums(const Word& w) {
  long long ysum = 0;
  for (std::uint8_t a : w.alphas) ysum += a;
  return {static_cast<long long>(w.length()), ysum};
}

bool has_essential_cyclic_rep(const Word& w) {
  auto [xsum, ysum] = exponent_sums(w);
  return xsum % 2 == 1 && ysum % 3 == 0;
}

Word subword(const Word& w, Interval iv) {
  std::size_t l = w.length();
  auto mod = [&](int v) {
    int m = static_cast<int>(l);
    return static_cast<std::size_t>(((v % m) + m) % m);
  };
  std::size_t start = mod(iv.start);
  std::size_t end = mod(iv.end);
  std::size_t count = (end + l - start) % l + 1;
  Word r;
  r.alphas.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    r.alphas.push_back(w.alphas[(start + i) % l]);
  return r;
}

namespace {

int parse_hex_index(const std::string& s, std::size_t& i) {
  std::size_t begin = i;
  int v = 0;
  while (i < s.size() && std::isxdigit(static_cast<unsigned char>(s[i]))) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    v = v * 16 + (c >= 'A' ? c - 'A' + 10 : c - '0');
    if (v > 1 << 20) throw ParseError("index too large", begin);
    ++i;
  }
  if (i == begin) throw ParseError("expected hexadecimal index", i);
  return v;
}

}  // namespace

Interval parse_interval(const std::string& text, std::size_t word_length) {
  if (word_length == 0) throw std::invalid_argument("empty word");
  std::size_t i = 0;
  std::size_t n = text.size();
  if (i < n && text[i] == '[') ++i;
  Interval iv;
  iv.start = parse_hex_index(text, i);
  if (i + 1 >= n || text[i] != '.' || text[i + 1] != '.')
    throw ParseError("expected '..'", i);
  i += 2;
  iv.end = parse_hex_index(text, i);
  if (i < n && text[i] == ']') ++i;
  if (i != n) throw ParseError("trailing characters in interval", i);
  int m = static_cast<int>(word_length);
  iv.start %= m;
  iv.end %= m;
  return iv;
}

std::string format_interval(Interval iv) {
  static const char* digits = "0123456789ABCDEF";
  auto hex = [&](int v) {
    std::string s;
    do {
      s.insert(s.begin(), digits[v % 16]);
      v /= 16;
    } while (v > 0);
    return s;
  };
  return "[" + hex(iv.start) + ".." + hex(iv.end) + "]";
}

BlockList parse_block_list(const std::string& text) {
  BlockList b;
  std::size_t i = 0;
  std::size_t n = text.size();
  if (i >= n || text[i] != '[') throw ParseError("expected '['", i);
  ++i;
  while (true) {
    std::size_t begin = i;
    long long v = 0;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1 << 20) throw ParseError("block length too large", begin);
      ++i;
    }
    if (i == begin) throw ParseError("expected block length", i);
    if (v < 1) throw ParseError("block length must be >= 1", begin);
    b.lengths.push_back(static_cast<int>(v));
    if (i < n && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= n || text[i] != ']') throw ParseError("expected ']'", i);
  ++i;
  if (i != n) throw ParseError("trailing characters in block list", i);
  return b;
}

std::string format_lengths(const std::vector<int>& lengths) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    if (i) os << ',';
    os << lengths[i];
  }
  os << ']';
  return os.str();
}

bool cyclically_equal(const Word& a, const Word& b) {
  if (a.length() != b.length()) return false;
  std::size_t l = a.length();
  for (std::size_t r = 0; r < l; ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < l && ok; ++i)
      ok = a.alphas[(r + i) % l] == b.alphas[i];
    if (ok) return true;
  }
  return false;
}

}  // namespace gt232
