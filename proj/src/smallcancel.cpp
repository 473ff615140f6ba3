#include "gt232/smallcancel.hpp"

#include <algorithm>

#include "gt232/tables.hpp"

namespace gt232 {

namespace {

std::string alpha_key(const std::vector<std::uint8_t>& alphas,
                      std::size_t start, std::size_t count, std::size_t l) {
  std::string s(count, '0');
  for (std::size_t i = 0; i < count; ++i)
    s[i] = static_cast<char>('0' + alphas[(start + i) % l]);
  return s;
}

}  // namespace

PieceIndex::PieceIndex(const Word& w) : word_(w) {
  std::size_t l = w.length();
  const Word inv = invert(w);
  const Word* bases[2] = {&word_, &inv};
  for (const Word* base : bases) {
    for (std::size_t rot = 0; rot < l; ++rot) {
      for (std::size_t len = 1; len <= l; ++len) {
        completions_[alpha_key(base->alphas, rot, len, l)].insert(
            alpha_key(base->alphas, rot + len, l - len, l));
      }
    }
  }
}

std::size_t PieceIndex::completion_count(const Word& u) const {
  auto it = completions_.find(alpha_key(u.alphas, 0, u.length(), u.length()));
  return it == completions_.end() ? 0 : it->second.size();
}

bool PieceIndex::is_piece(Interval iv) const {
  return completion_count(subword(word_, iv)) >= 2;
}

PieceIndex build_piece_index(const Word& w) { return PieceIndex(w); }

bool is_piece(const Word& w, Interval iv) {
  return PieceIndex(w).is_piece(iv);
}

DecompositionCheck verify_decomposition(const Word& w, const Decomposition& d,
                                        const DecompositionCheckOptions& opts) {
  DecompositionCheck res;
  int l = static_cast<int>(w.length());
  auto mod = [&](int v) { return ((v % l) + l) % l; };

  if (d.factors.empty()) {
    res.reasons.push_back("no factors");
    return res;
  }
  if (static_cast<int>(d.factors.size()) != opts.factor_count)
    res.reasons.push_back("factor count " + std::to_string(d.factors.size()) +
                          " != " + std::to_string(opts.factor_count));

  // Factors must be consecutive and cover the cyclic word exactly once.
  int covered = 0;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const Interval& cur = d.factors[i];
    const Interval& nxt = d.factors[(i + 1) % d.factors.size()];
    covered += (mod(cur.end - cur.start)) + 1;
    if (mod(cur.end + 1) != mod(nxt.start)) {
      res.reasons.push_back("factor " + std::to_string(i + 1) +
                            " is not followed immediately by factor " +
                            std::to_string((i + 1) % d.factors.size() + 1));
    }
  }
  if (covered != l)
    res.reasons.push_back("factors cover " + std::to_string(covered) +
                          " syllable pairs, word has " + std::to_string(l));

  PieceIndex index(w);
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const Interval& iv = d.factors[i];
    int pairs = mod(iv.end - iv.start) + 1;
    int len = 2 * pairs;  // free-product length
    if (opts.require_even && len % 2 != 0)
      res.reasons.push_back("factor " + std::to_string(i + 1) +
                            " has odd length");
    if (len < opts.min_length)
      res.reasons.push_back("factor " + std::to_string(i + 1) + " has length " +
                            std::to_string(len) + " < " +
                            std::to_string(opts.min_length));
    if (index.is_piece(iv))
      res.reasons.push_back("factor " + std::to_string(i + 1) + " = " +
                            print_word(subword(w, iv)) + " is a piece");
  }

  res.pass = res.reasons.empty();
  return res;
}

std::optional<Decomposition> find_decomposition(const Word& w, int k,
                                                int min_length, bool even) {
  if (k < 1) throw std::invalid_argument("find_decomposition: k >= 1");
  int l = static_cast<int>(w.length());
  // Syllable-aligned factors have even free-product length 2*pairs.
  int min_pairs = (min_length + 1) / 2;
  if (even && min_length % 2 != 0) min_pairs = (min_length + 2) / 2;
  min_pairs = std::max(min_pairs, 1);
  if (static_cast<long long>(k) * min_pairs > l) return std::nullopt;

  PieceIndex index(w);
  auto non_piece = [&](int start, int pairs) {
    return !index.is_piece({start, (start + pairs - 1) % l});
  };

  std::vector<int> cuts(k, 0);  // pair counts per factor
  for (int start = 0; start < l; ++start) {
    // lexicographic scan over compositions of l into k parts >= min_pairs
    std::vector<int> parts(k, min_pairs);
    parts[k - 1] = l - min_pairs * (k - 1);
    while (true) {
      bool ok = true;
      int pos = start;
      for (int i = 0; i < k && ok; ++i) {
        ok = non_piece(pos, parts[i]);
        pos = (pos + parts[i]) % l;
      }
      if (ok) {
        Decomposition d;
        int s = start;
        for (int i = 0; i < k; ++i) {
          d.factors.push_back({s, (s + parts[i] - 1) % l});
          s = (s + parts[i]) % l;
        }
        return d;
      }
      // next composition with all parts >= min_pairs
      int j = k - 1;
      while (j >= 0 && parts[j] == min_pairs) --j;
      if (j <= 0) break;
      long long rest = 0;
      for (int i = j; i < k; ++i) rest += parts[i];
      parts[j - 1] += 1;
      rest -= 1;
      for (int i = j; i < k - 1; ++i) {
        parts[i] = min_pairs;
        rest -= min_pairs;
      }
      parts[k - 1] = static_cast<int>(rest);
      if (parts[k - 1] < min_pairs) break;
    }
  }
  return std::nullopt;
}

std::string format_decomposition(const Word& w, const Decomposition& d) {
  std::string out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (i) out += "·";
    out += "[" + print_word(subword(w, d.factors[i])) + "]";
  }
  return out;
}

std::vector<Table2Check> verify_table2() {
  std::vector<Table2Check> out;
  for (const DecompositionRow& row : table2()) {
    Table2Check tc;
    tc.row = row.n;
    try {
      std::vector<Word> factors;
      Word whole;
      for (const char* f : row.factors) {
        factors.push_back(parse_word(f));
        whole.alphas.insert(whole.alphas.end(), factors.back().alphas.begin(),
                            factors.back().alphas.end());
      }

      const CatalogueRow* cat = nullptr;
      for (const CatalogueRow& r : table1())
        if (r.n == row.n) cat = &r;
      if (!cat) {
        tc.detail = "no catalogue row " + std::to_string(row.n);
      } else if (!cyclically_equal(whole, parse_word(cat->word))) {
        tc.detail = "factor product is not a cyclic permutation of the "
                    "catalogue word";
      } else {
        Decomposition d;
        int pos = 0;
        for (const Word& f : factors) {
          int pairs = static_cast<int>(f.length());
          d.factors.push_back({pos, pos + pairs - 1});
          pos += pairs;
        }
        DecompositionCheck chk = verify_decomposition(whole, d);
        if (!chk.pass) {
          tc.detail = chk.reasons.front();
          for (std::size_t i = 1; i < chk.reasons.size(); ++i)
            tc.detail += "; " + chk.reasons[i];
        }
      }
    } catch (const std::exception& ex) {
      tc.detail = ex.what();
    }
    tc.pass = tc.detail.empty();
    out.push_back(std::move(tc));
  }
  return out;
}

}  // namespace gt232
