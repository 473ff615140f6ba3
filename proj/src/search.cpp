#include "gt232/search.hpp"

#include "gt232/tables.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gt232 {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

namespace {

// Lexicographic successor of a composition into positive parts.
bool next_composition(std::vector<int>& a) {
  int k = static_cast<int>(a.size());
  int j = k - 1;
  while (j >= 0 && a[j] == 1) --j;
  if (j <= 0) return false;
  long long s = 0;
  for (int i = j; i < k; ++i) s += a[i];
  a[j - 1] += 1;
  s -= 1;
  for (int i = j; i < k - 1; ++i) {
    a[i] = 1;
    s -= 1;
  }
  a[k - 1] = static_cast<int>(s);
  return true;
}

}  // namespace

CompositionStream::CompositionStream(int total, int parts) {
  if (parts < 1 || total < parts) {
    done_ = true;
    return;
  }
  cur_.assign(parts, 1);
  cur_.back() = total - parts + 1;
}

bool CompositionStream::next(std::vector<int>& out) {
  if (done_) return false;
  out = cur_;
  done_ = !next_composition(cur_);
  return true;
}

std::uint64_t CompositionStream::count(int total, int parts) {
  if (parts < 1 || total < parts) return 0;
  return binomial(total - 1, parts - 1);
}

std::vector<int> CompositionStream::unrank(int total, int parts,
                                           std::uint64_t rank) {
  if (rank >= count(total, parts))
    throw std::out_of_range("composition rank out of range");
  std::vector<int> a(parts);
  int n = total;
  for (int i = 0; i < parts - 1; ++i) {
    int v = 1;
    while (true) {
      std::uint64_t cnt = binomial(n - v - 1, parts - i - 2);
      if (rank < cnt) break;
      rank -= cnt;
      ++v;
    }
    a[i] = v;
    n -= v;
  }
  a[parts - 1] = n;
  return a;
}

SubsetStream::SubsetStream(int m, int k) : m_(m) {
  if (k < 0 || k > m) {
    done_ = true;
    return;
  }
  cur_.resize(k);
  for (int i = 0; i < k; ++i) cur_[i] = i + 1;
}

bool SubsetStream::next(std::vector<int>& out) {
  if (done_) return false;
  out = cur_;
  int k = static_cast<int>(cur_.size());
  int i = 0;
  while (i < k) {
    int limit = i + 1 < k ? cur_[i + 1] : m_ + 1;
    if (cur_[i] + 1 < limit) break;
    ++i;
  }
  if (i == k) {
    done_ = true;
  } else {
    ++cur_[i];
    for (int j = 0; j < i; ++j) cur_[j] = j + 1;
  }
  return true;
}

std::uint64_t SubsetStream::count(int m, int k) { return binomial(m, k); }

namespace {

void assemble_into(const std::vector<int>& L, const std::vector<int>& C, int c,
                   int e, std::vector<int>& out) {
  int t = 2 * e + 2;
  if (static_cast<int>(L.size()) != c + e)
    throw std::invalid_argument("assemble: |L| must be c+e");
  if (static_cast<int>(C.size()) != e + 2 - c)
    throw std::invalid_argument("assemble: |C| must be e+2-c");
  out.assign(t, 0);
  for (int pos : C) {
    if (pos < 1 || pos > t) throw std::invalid_argument("assemble: C position out of range");
    if (out[pos - 1] != 0) throw std::invalid_argument("assemble: duplicate C position");
    out[pos - 1] = 1;
  }
  std::size_t li = 0;
  for (int i = 0; i < t; ++i)
    if (out[i] == 0) out[i] = L[li++] + 1;
}

}  // namespace

std::vector<int> assemble(const std::vector<int>& L, const std::vector<int>& C,
                          int c, int e) {
  std::vector<int> out;
  assemble_into(L, C, c, e, out);
  return out;
}

namespace {

// --- screening ---------------------------------------------------------

// Fixed-width kernel for the exact screen: entries of the 2x2 word matrix
// evaluated at λ = u (u^2 = A u + B), stored as (p + q s) with p, q in the
// order.  All archimedean embeddings of these entries are bounded (the
// evaluated representation is conjugate into SU(2) for |λ| < sqrt(3)), so
// the integer coordinates stay small; a guard triggers the slow exact
// fallback if that ever fails.
struct KernelElem {
  std::int64_t pa, pb, qa, qb;
};

constexpr std::int64_t kGuard = std::int64_t{1} << 30;

inline KernelElem kernel_mul_s(const KernelElem& v, int A, int B) {
  // (p + q s) s = -q + (p - u q) s
  return {-v.qa, -v.qb, v.pa - static_cast<std::int64_t>(B) * v.qb,
          v.pb - v.qa - static_cast<std::int64_t>(A) * v.qb};
}

inline KernelElem kernel_mul_ls(const KernelElem& v, int A, int B) {
  // (p + q s)(u + s) = (u p - q) + p s
  return {static_cast<std::int64_t>(B) * v.pb - v.qa,
          v.pa + static_cast<std::int64_t>(A) * v.pb - v.qb, v.pa, v.pb};
}

inline KernelElem kernel_sub(const KernelElem& a, const KernelElem& b) {
  return {a.pa - b.pa, a.pb - b.pb, a.qa - b.qa, a.qb - b.qb};
}

inline KernelElem kernel_add(const KernelElem& a, const KernelElem& b) {
  return {a.pa + b.pa, a.pb + b.pb, a.qa + b.qa, a.qb + b.qb};
}

inline std::int64_t kernel_maxabs(const KernelElem& v) {
  std::int64_t m = std::abs(v.pa);
  m = std::max(m, std::abs(v.pb));
  m = std::max(m, std::abs(v.qa));
  return std::max(m, std::abs(v.qb));
}

// tau at u from an XY-first block list; false when the guard trips.
bool kernel_eval(const std::vector<int>& lengths, int A, int B,
                 std::int64_t out[2]) {
  KernelElem m00{1, 0, 0, 0}, m01{0, 0, 0, 0};
  KernelElem m10{0, 0, 0, 0}, m11{1, 0, 0, 0};
  for (std::size_t blk = 0; blk < lengths.size(); ++blk) {
    bool xy = blk % 2 == 0;
    for (int rep = 0; rep < lengths[blk]; ++rep) {
      if (xy) {
        KernelElem n00 = kernel_mul_ls(m00, A, B);
        KernelElem n10 = kernel_mul_ls(m10, A, B);
        m01 = kernel_sub(m00, kernel_mul_s(m01, A, B));
        m11 = kernel_sub(m10, kernel_mul_s(m11, A, B));
        m00 = n00;
        m10 = n10;
      } else {
        m00 = kernel_add(kernel_mul_ls(m00, A, B), m01);
        m10 = kernel_add(kernel_mul_ls(m10, A, B), m11);
        KernelElem z{0, 0, 0, 0};
        m01 = kernel_sub(z, kernel_mul_s(m01, A, B));
        m11 = kernel_sub(z, kernel_mul_s(m11, A, B));
      }
      std::int64_t m = std::max(std::max(kernel_maxabs(m00), kernel_maxabs(m01)),
                                std::max(kernel_maxabs(m10), kernel_maxabs(m11)));
      if (m > kGuard) return false;
    }
  }
  KernelElem tr = kernel_add(m00, m11);
  if (tr.qa != 0 || tr.qb != 0)
    throw std::logic_error("screen kernel: nonzero s-component in trace");
  out[0] = tr.pa;
  out[1] = tr.pb;
  return true;
}

bool exact_zero_at_order(const std::vector<int>& lengths, int A, int B) {
  std::int64_t tr[2];
  if (kernel_eval(lengths, A, B, tr)) return tr[0] == 0 && tr[1] == 0;
  // Guard tripped: redo with arbitrary precision.
  Word w = from_blocks({lengths, BlockType::XY});
  QuadOrderElem v = poly_eval_quad(trace_poly(w), QuadOrderElem{0, 1, A, B});
  return v.is_zero();
}

// Wraparound evaluation of tau at λ = 3 (arithmetic mod 2^64): a match with
// the target there is a necessary condition for tau == target, checked with
// exact integer arithmetic, so true matches always survive.
std::uint64_t wrap64_tau_at_3(const std::vector<int>& lengths) {
  using U = std::uint64_t;
  struct W64 { U p, q; };  // p + q s  with  s^2 = -3 s - 1
  auto mul_s = [](W64 v) { return W64{0 - v.q, v.p - 3 * v.q}; };
  auto mul_ls = [](W64 v) { return W64{3 * v.p - v.q, v.p}; };
  W64 m00{1, 0}, m01{0, 0}, m10{0, 0}, m11{1, 0};
  for (std::size_t blk = 0; blk < lengths.size(); ++blk) {
    bool xy = blk % 2 == 0;
    for (int rep = 0; rep < lengths[blk]; ++rep) {
      if (xy) {
        W64 n00 = mul_ls(m00), n10 = mul_ls(m10);
        W64 s01 = mul_s(m01), s11 = mul_s(m11);
        m01 = {m00.p - s01.p, m00.q - s01.q};
        m11 = {m10.p - s11.p, m10.q - s11.q};
        m00 = n00;
        m10 = n10;
      } else {
        W64 l00 = mul_ls(m00), l10 = mul_ls(m10);
        m00 = {l00.p + m01.p, l00.q + m01.q};
        m10 = {l10.p + m11.p, l10.q + m11.q};
        W64 s01 = mul_s(m01), s11 = mul_s(m11);
        m01 = {0 - s01.p, 0 - s01.q};
        m11 = {0 - s11.p, 0 - s11.q};
      }
    }
  }
  if (m00.q + m11.q != 0)
    throw std::logic_error("wrap64 screen: nonzero s-component in trace");
  return m00.p + m11.p;
}

std::uint64_t wrap64_target_at_3(int c, int e) {
  std::uint64_t v = 3;
  for (int i = 0; i < c; ++i) v *= 7;    // 3^2 - 2
  for (int i = 0; i < e; ++i) v *= 55;   // 3^4 - 3*3^2 + 1
  return v;
}

double float_tau_at(const std::vector<int>& lengths, double z) {
  using Cpx = std::complex<double>;
  Cpx s(-z / 2.0, std::sqrt(std::max(0.0, 4.0 - z * z)) / 2.0);
  Cpx diag = Cpx(z, 0) + s;
  Cpx ms = -s;
  Cpx m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (std::size_t blk = 0; blk < lengths.size(); ++blk) {
    bool xy = blk % 2 == 0;
    for (int rep = 0; rep < lengths[blk]; ++rep) {
      if (xy) {
        Cpx n00 = m00 * diag, n10 = m10 * diag;
        m01 = m00 + m01 * ms;
        m11 = m10 + m11 * ms;
        m00 = n00;
        m10 = n10;
      } else {
        m00 = m00 * diag + m01;
        m10 = m10 * diag + m11;
        m01 = m01 * ms;
        m11 = m11 * ms;
      }
    }
  }
  return (m00 + m11).real();
}

}  // namespace

bool screen_candidate(const std::vector<int>& lengths, const SearchParams& p) {
  switch (p.screen) {
    case ScreenMode::None:
      return true;
    case ScreenMode::Exact:
      if (wrap64_tau_at_3(lengths) != wrap64_target_at_3(p.c, p.e))
        return false;
      if (p.c > 0 && !exact_zero_at_order(lengths, 0, 2)) return false;
      if (p.e > 0 && !exact_zero_at_order(lengths, 1, 1)) return false;
      return true;
    case ScreenMode::Float: {
      if (p.c > 0 && std::fabs(float_tau_at(lengths, std::sqrt(2.0))) > p.tolerance)
        return false;
      if (p.e > 0 &&
          std::fabs(float_tau_at(lengths, (1.0 + std::sqrt(5.0)) / 2.0)) >
              p.tolerance)
        return false;
      double want = (p.c + p.e) % 2 == 0 ? 1.0 : -1.0;  // target at λ = 1
      return std::fabs(float_tau_at(lengths, 1.0) - want) <= p.tolerance;
    }
  }
  return true;
}

namespace {

// --- core search machinery ---------------------------------------------

bool is_canonical(const std::vector<int>& v) {
  std::size_t t = v.size();
  if (t <= 1) return true;
  int mn = *std::min_element(v.begin(), v.end());
  if (v[0] != mn) return false;
  // forward rotations
  for (std::size_t r = 1; r < t; ++r) {
    if (v[r] != mn) continue;
    for (std::size_t i = 0; i < t; ++i) {
      int a = v[(r + i) % t];
      if (a != v[i]) {
        if (a < v[i]) return false;
        break;
      }
    }
  }
  // rotations of the reversal, read off the original by index
  for (std::size_t r = 0; r < t; ++r) {
    if (v[t - 1 - r] != mn) continue;
    for (std::size_t i = 0; i < t; ++i) {
      int a = v[t - 1 - (r + i) % t];
      if (a != v[i]) {
        if (a < v[i]) return false;
        break;
      }
    }
  }
  return true;
}

struct LocalAcc {
  std::uint64_t raw = 0, canonical = 0, screened = 0, exact = 0;
  std::vector<SearchHit> hits;

  void merge(const LocalAcc& o) {
    raw += o.raw;
    canonical += o.canonical;
    screened += o.screened;
    exact += o.exact;
    hits.insert(hits.end(), o.hits.begin(), o.hits.end());
  }
};

struct SearchContext {
  SearchParams p;
  int total = 0;  // composition total 2c+2e-1
  int parts = 0;  // c+e
  int t = 0;      // 2e+2
  int ones = 0;   // e+2-c
  IntPoly target;
  std::vector<std::vector<int>> subsets;  // subsets to iterate per L
  std::uint64_t bulk_skipped_subsets = 0;  // never canonical, counted in bulk
  std::uint64_t n_L = 0;
};

SearchContext make_context(const SearchParams& p) {
  SearchContext ctx;
  ctx.p = p;
  ctx.total = 2 * p.c + 2 * p.e - 1;
  ctx.parts = p.c + p.e;
  ctx.t = 2 * p.e + 2;
  ctx.ones = p.e + 2 - p.c;
  ctx.target = target_poly(p.c, p.e);
  ctx.n_L = CompositionStream::count(ctx.total, ctx.parts);

  SubsetStream ss(ctx.t, ctx.ones);
  std::vector<int> C;
  while (ss.next(C)) {
    // A candidate with block 1s but none in position 1 cannot be the
    // lexicographically least representative of its class; skip it in bulk.
    if (ctx.ones >= 1 &&
        std::find(C.begin(), C.end(), 1) == C.end()) {
      ++ctx.bulk_skipped_subsets;
    } else {
      ctx.subsets.push_back(C);
    }
  }
  return ctx;
}

void process_candidate(const SearchContext& ctx, const std::vector<int>& lengths,
                       LocalAcc& acc) {
  if (!is_canonical(lengths)) return;
  ++acc.canonical;
  if (!screen_candidate(lengths, ctx.p)) return;
  ++acc.screened;
  ++acc.exact;
  Word w = from_blocks({lengths, BlockType::XY});
  IntPoly tau = trace_poly(w);
  if (tau == ctx.target)
    acc.hits.push_back({lengths, print_word(w), std::move(tau)});
}

void scan_L_range(const SearchContext& ctx, std::uint64_t lo, std::uint64_t hi,
                  LocalAcc& acc) {
  if (lo >= hi) return;
  std::vector<int> L = CompositionStream::unrank(ctx.total, ctx.parts, lo);
  std::vector<int> lengths;
  for (std::uint64_t r = lo; r < hi; ++r) {
    acc.raw += ctx.bulk_skipped_subsets;
    for (const std::vector<int>& C : ctx.subsets) {
      ++acc.raw;
      assemble_into(L, C, ctx.p.c, ctx.p.e, lengths);
      process_candidate(ctx, lengths, acc);
    }
    if (r + 1 < hi && !next_composition(L))
      throw std::logic_error("composition stream exhausted early");
  }
}

void sort_hits(std::vector<SearchHit>& hits) {
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit& a, const SearchHit& b) { return a.blocks < b.blocks; });
}

SearchReport special_case_xy(const SearchParams& p) {
  SearchReport rep;
  rep.params = p;
  rep.raw_count = rep.canonical_count = rep.screened_count =
      rep.exact_checked_count = 1;
  Word w = parse_word("xy");
  IntPoly tau = trace_poly(w);
  if (tau == target_poly(0, 0))
    rep.hits.push_back({{1}, print_word(w), std::move(tau)});
  return rep;
}

void validate_params(const SearchParams& p) {
  if (p.c < 0 || p.e < 0)
    throw std::invalid_argument("search: c and e must be non-negative");
  if (!p.force && !is_admissible(p.c, p.e))
    throw std::invalid_argument(
        "search: (c,e) outside the admissible region (use force to override)");
  if (p.length() > 33 && !p.huge_ok)
    throw std::invalid_argument(
        "search: length parameter " + std::to_string(p.length()) +
        " > 33 is not desk scale; request the huge tier explicitly");
  if (p.workers < 1) throw std::invalid_argument("search: workers >= 1");
}

// --- checkpointing (huge searches) --------------------------------------

const char* screen_name(ScreenMode m) {
  switch (m) {
    case ScreenMode::Float:
      return "float";
    case ScreenMode::Exact:
      return "exact";
    case ScreenMode::None:
      return "none";
  }
  return "?";
}

struct CheckpointState {
  std::uint64_t l_next = 0;
  LocalAcc acc;
};

void save_checkpoint(const std::string& path, const SearchContext& ctx,
                     std::uint64_t l_next, const LocalAcc& acc) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw std::runtime_error("cannot write checkpoint " + tmp);
    os << "# gt232 search checkpoint\n";
    os << "c=" << ctx.p.c << " e=" << ctx.p.e << " screen="
       << screen_name(ctx.p.screen) << "\n";
    os << "lnext=" << l_next << "\n";
    os << "raw=" << acc.raw << " canonical=" << acc.canonical
       << " screened=" << acc.screened << " exact_checked=" << acc.exact
       << "\n";
    for (const SearchHit& h : acc.hits)
      os << "hit=" << format_lengths(h.blocks) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot move checkpoint into place: " + path);
}

std::optional<CheckpointState> load_checkpoint(const std::string& path,
                                               const SearchContext& ctx) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  CheckpointState st;
  std::string line;
  std::string expect_params = "c=" + std::to_string(ctx.p.c) +
                              " e=" + std::to_string(ctx.p.e) +
                              " screen=" + screen_name(ctx.p.screen);
  bool params_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("c=", 0) == 0) {
      if (line != expect_params)
        throw std::runtime_error("checkpoint " + path +
                                 " belongs to a different search: " + line);
      params_seen = true;
    } else if (line.rfind("lnext=", 0) == 0) {
      st.l_next = std::stoull(line.substr(6));
    } else if (line.rfind("raw=", 0) == 0) {
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) {
        auto eq = tok.find('=');
        std::uint64_t v = std::stoull(tok.substr(eq + 1));
        std::string key = tok.substr(0, eq);
        if (key == "raw") st.acc.raw = v;
        else if (key == "canonical") st.acc.canonical = v;
        else if (key == "screened") st.acc.screened = v;
        else if (key == "exact_checked") st.acc.exact = v;
      }
    } else if (line.rfind("hit=", 0) == 0) {
      BlockList b = parse_block_list(line.substr(4));
      Word w = from_blocks(BlockList{b.lengths, BlockType::XY});
      st.acc.hits.push_back({b.lengths, print_word(w), trace_poly(w)});
    }
  }
  if (!params_seen)
    throw std::runtime_error("checkpoint " + path + " has no parameter line");
  return st;
}

}  // namespace

SearchReport run_search(const SearchParams& p) {
  validate_params(p);
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.params = p;

  if (p.c + p.e == 0) {
    rep = special_case_xy(p);
  } else if (p.e + 2 - p.c >= 0) {
    SearchContext ctx = make_context(p);
    LocalAcc total;
    std::uint64_t start_l = 0;

    bool checkpointing = p.huge_ok && !p.checkpoint_path.empty();
    if (checkpointing) {
      if (auto st = load_checkpoint(p.checkpoint_path, ctx)) {
        start_l = st->l_next;
        total = std::move(st->acc);
      }
    }

    std::uint64_t n_c = SubsetStream::count(ctx.t, ctx.ones);
    std::uint64_t chunk = ctx.n_L;
    if (checkpointing && n_c > 0)
      chunk = std::max<std::uint64_t>(1, p.checkpoint_stride / n_c);

    std::uint64_t slices = 0;
    for (std::uint64_t lo = start_l; lo < ctx.n_L; lo += chunk) {
      if (p.max_l_slices > 0 && slices++ >= p.max_l_slices) break;
      std::uint64_t hi = std::min(ctx.n_L, lo + chunk);
      int nw = p.workers;
      std::vector<LocalAcc> locals(nw);
      std::uint64_t span = hi - lo;
#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) num_threads(nw)
#endif
      for (int tid = 0; tid < nw; ++tid) {
        std::uint64_t a = lo + span * static_cast<std::uint64_t>(tid) / nw;
        std::uint64_t b = lo + span * (static_cast<std::uint64_t>(tid) + 1) / nw;
        scan_L_range(ctx, a, b, locals[tid]);
      }
      for (const LocalAcc& acc : locals) total.merge(acc);
      if (checkpointing) save_checkpoint(p.checkpoint_path, ctx, hi, total);
    }

    sort_hits(total.hits);
    rep.hits = std::move(total.hits);
    rep.raw_count = total.raw;
    rep.canonical_count = total.canonical;
    rep.screened_count = total.screened;
    rep.exact_checked_count = total.exact;
  }
  // e + 2 - c < 0: no candidate has the block structure a hit needs; the
  // report stays empty.

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

SearchReport run_search_serial(const SearchParams& p) {
  validate_params(p);
  auto t0 = std::chrono::steady_clock::now();
  SearchReport rep;
  rep.params = p;

  if (p.c + p.e == 0) {
    rep = special_case_xy(p);
  } else if (p.e + 2 - p.c >= 0) {
    SearchContext ctx = make_context(p);
    LocalAcc acc;
    CompositionStream ls(ctx.total, ctx.parts);
    std::vector<int> L;
    while (ls.next(L)) {
      SubsetStream cs(ctx.t, ctx.ones);
      std::vector<int> C;
      while (cs.next(C)) {
        ++acc.raw;
        process_candidate(ctx, assemble(L, C, p.c, p.e), acc);
      }
    }
    sort_hits(acc.hits);
    rep.hits = std::move(acc.hits);
    rep.raw_count = acc.raw;
    rep.canonical_count = acc.canonical;
    rep.screened_count = acc.screened;
    rep.exact_checked_count = acc.exact;
  }

  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

std::vector<SearchReport> search_all(int max_len, const SearchParams& base) {
  std::vector<CEPair> pairs;
  for (CEPair ce : admissible_params())
    if (ce.length() <= max_len) pairs.push_back(ce);
  std::sort(pairs.begin(), pairs.end(), [](CEPair a, CEPair b) {
    return std::pair(a.length(), a.c) < std::pair(b.length(), b.c);
  });
  std::vector<SearchReport> out;
  out.reserve(pairs.size());
  for (CEPair ce : pairs) {
    SearchParams p = base;
    p.c = ce.c;
    p.e = ce.e;
    out.push_back(run_search(p));
  }
  return out;
}

void write_report(std::ostream& os, const SearchReport& r, bool include_timing) {
  os << "# search c=" << r.params.c << " e=" << r.params.e
     << " l=" << r.params.length() << " workers=" << r.params.workers
     << " screen=" << screen_name(r.params.screen) << " raw=" << r.raw_count
     << " canonical=" << r.canonical_count << " screened=" << r.screened_count
     << " exact_checked=" << r.exact_checked_count << " hits=" << r.hits.size()
     << "\n";
  for (const SearchHit& h : r.hits) {
    os << r.params.c << ',' << r.params.e << ',' << format_lengths(h.blocks)
       << ',' << h.word << ',' << h.tau.to_list_string() << "\n";
  }
  if (include_timing) os << "# wall_seconds=" << r.wall_seconds << "\n";
}

std::vector<RowCheck> verify_table1() {
  std::vector<RowCheck> out;
  for (const CatalogueRow& row : table1()) {
    RowCheck rc;
    rc.row = row.n;
    try {
      Word w = parse_word(row.word);
      IntPoly tau = trace_poly(w);
      IntPoly target = target_poly(row.c, row.e);
      int l = 1 + 2 * row.c + 4 * row.e;
      if (static_cast<int>(w.length()) != l) {
        rc.detail = "length " + std::to_string(w.length()) + " != " +
                    std::to_string(l);
      } else if (tau != target) {
        rc.detail = "trace " + tau.to_pretty_string() + " != " +
                    target.to_pretty_string();
      } else {
        BlockList b = to_blocks(w);
        int t = static_cast<int>(b.lengths.size());
        int longs = static_cast<int>(
            std::count_if(b.lengths.begin(), b.lengths.end(),
                          [](int v) { return v > 1; }));
        if (row.c + row.e == 0) {
          if (w.length() != 1 || t != 1) rc.detail = "expected l = 1, one block";
        } else if (t != 2 * row.e + 2) {
          rc.detail = "block count " + std::to_string(t) + " != " +
                      std::to_string(2 * row.e + 2);
        } else if (longs != row.c + row.e) {
          rc.detail = "blocks of length > 1: " + std::to_string(longs) +
                      " != " + std::to_string(row.c + row.e);
        }
      }
    } catch (const std::exception& ex) {
      rc.detail = ex.what();
    }
    rc.pass = rc.detail.empty();
    out.push_back(std::move(rc));
  }
  return out;
}

}  // namespace gt232
