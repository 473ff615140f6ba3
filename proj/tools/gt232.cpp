#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

#include "gt232/repcheck.hpp"
#include "gt232/search.hpp"
#include "gt232/smallcancel.hpp"
#include "gt232/tables.hpp"
#include "gt232/trace.hpp"
#include "gt232/words.hpp"

namespace {

using namespace gt232;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;   // verification failure or no result
constexpr int kExitUsage = 2;  // malformed input / bad flags

Word word_from_options(const std::string& word_expr, const std::string& blocks) {
  if (!word_expr.empty() && !blocks.empty())
    throw CLI::ValidationError("give either --word or --blocks, not both");
  if (!word_expr.empty()) return parse_word(word_expr);
  if (!blocks.empty()) return from_blocks(parse_block_list(blocks));
  throw CLI::ValidationError("one of --word or --blocks is required");
}

int cmd_trace(const std::string& word_expr, const std::string& blocks) {
  Word w = word_from_options(word_expr, blocks);
  std::cout << "word: " << print_word(w) << "\n";
  std::cout << "blocks: " << format_lengths(to_blocks(w).lengths) << "\n";
  IntPoly tau = trace_poly(w);
  std::cout << "tau: " << tau.to_pretty_string() << "\n";
  std::cout << "coeffs: " << tau.to_list_string() << "\n";
  if (auto form = classify_elementary(tau)) {
    std::cout << "elementary: unit=" << (form->unit > 0 ? "+1" : "-1")
              << " a=" << form->a << " b=" << form->b << " c=" << form->c
              << " d=" << form->d << " e=" << form->e << "\n";
  } else {
    std::cout << "not elementary\n";
  }
  return kExitOk;
}

int cmd_canon(const std::string& blocks) {
  BlockList b = parse_block_list(blocks);
  std::cout << format_lengths(canonicalize(b).lengths) << "\n";
  return kExitOk;
}

void emit_report(const SearchReport& rep, bool timing, const std::string& out) {
  write_report(std::cout, rep, timing);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write report file " + out);
    write_report(os, rep, timing);
  }
}

int cmd_pieces(const std::string& word_expr, const std::string& interval) {
  Word w = parse_word(word_expr);
  Interval iv = parse_interval(interval, w.length());
  PieceIndex index(w);
  bool piece = index.is_piece(iv);
  std::cout << format_interval(iv) << " = " << print_word(subword(w, iv))
            << ": " << (piece ? "piece" : "non-piece") << "\n";
  return kExitOk;
}

int cmd_decompose(const std::string& word_expr, int factors, int min_length,
                  bool even) {
  Word w = parse_word(word_expr);
  auto d = find_decomposition(w, factors, min_length, even);
  if (!d) {
    std::cout << "none\n";
    return kExitFail;
  }
  std::cout << format_decomposition(w, *d) << "\n";
  return kExitOk;
}

bool report_checks(const std::string& what, const std::vector<RowCheck>& rows) {
  bool all = true;
  for (const RowCheck& rc : rows) {
    if (rc.pass) {
      std::cout << "PASS " << what << " row " << rc.row << "\n";
    } else {
      std::cout << "FAIL " << what << " row " << rc.row << ": " << rc.detail
                << "\n";
      all = false;
    }
  }
  return all;
}

bool verify_table1_cli() {
  bool ok = report_checks("table1", verify_table1());
  std::cout << "table1: " << (ok ? "all rows pass" : "FAILURES") << "\n";
  return ok;
}

bool verify_table2_cli() {
  bool all = true;
  for (const Table2Check& tc : verify_table2()) {
    if (tc.pass) {
      std::cout << "PASS table2 row " << tc.row << "\n";
    } else {
      std::cout << "FAIL table2 row " << tc.row << ": " << tc.detail << "\n";
      all = false;
    }
  }
  std::cout << "table2: " << (all ? "all rows pass" : "FAILURES") << "\n";
  return all;
}

bool verify_bounds_cli() {
  bool all = true;
  for (const BoundCheck& bc : verify_bounds()) {
    std::cout << (bc.pass ? "PASS " : "FAIL ") << bc.name;
    if (bc.value != 0.0)
      std::cout << " (value " << std::setprecision(6) << bc.value << ")";
    std::cout << "\n";
    all = all && bc.pass;
  }
  std::cout << "bounds: " << (all ? "all pass" : "FAILURES") << "\n";
  return all;
}

bool report_repcheck(const std::string& what, const CheckResult& res) {
  for (const CheckLine& l : res.lines)
    std::cout << (l.pass ? "PASS " : "FAIL ") << what << ": " << l.name << "\n";
  return res.pass;
}

bool verify_repcheck_cli() {
  bool ok = report_repcheck("relators", verify_relators());
  ok = report_repcheck("eigenstructure", verify_eigenstructure()) && ok;
  ok = report_repcheck("witness", verify_nonelementary_witness()) && ok;
  std::cout << "repcheck: " << (ok ? "all pass" : "FAILURES") << "\n";
  return ok;
}

int cmd_verify(const std::string& what) {
  bool ok;
  if (what == "table1")
    ok = verify_table1_cli();
  else if (what == "table2")
    ok = verify_table2_cli();
  else if (what == "bounds")
    ok = verify_bounds_cli();
  else if (what == "repcheck")
    ok = verify_repcheck_cli();
  else if (what == "all")
    ok = verify_table1_cli() & verify_table2_cli() & verify_bounds_cli() &
         verify_repcheck_cli();
  else
    throw CLI::ValidationError(
        "verify: expected table1|table2|bounds|repcheck|all");
  return ok ? kExitOk : kExitFail;
}

int cmd_figure_data(const std::string& which, double from, double to,
                    double step) {
  FigureFn fn;
  if (which == "f")
    fn = FigureFn::F;
  else if (which == "g")
    fn = FigureFn::G;
  else if (which == "sigma0")
    fn = FigureFn::Sigma0;
  else
    throw CLI::ValidationError("figure-data: --which f|g|sigma0");
  std::cout << "x," << which << "\n";
  for (auto [x, y] : figure_data(fn, from, to, step))
    std::cout << std::setprecision(12) << x << ',' << y << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact word, trace-polynomial, search and small-cancellation "
               "tools for generalised triangle groups of type (2,3,2)"};
  app.require_subcommand(1);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "suppress timing output");

  std::string word_expr, blocks;
  auto* trace_cmd = app.add_subcommand("trace", "trace polynomial of a word");
  trace_cmd->add_option("--word", word_expr, "word expression, e.g. (xy)^2xy^2");
  trace_cmd->add_option("--blocks", blocks, "block list, e.g. [2,1,1,1]");

  std::string canon_blocks;
  auto* canon_cmd = app.add_subcommand("canon", "canonical form of a block list");
  canon_cmd->add_option("--blocks", canon_blocks, "block list")->required();

  SearchParams sp;
  std::string screen_name = "exact", out_file, checkpoint;
  auto* search_cmd = app.add_subcommand("search", "exhaustive search for one (c,e)");
  search_cmd->add_option("--c", sp.c, "multiplicity of λ^2-2")->required();
  search_cmd->add_option("--e", sp.e, "multiplicity of λ^4-3λ^2+1")->required();
  search_cmd->add_option("--workers", sp.workers, "parallel workers");
  search_cmd->add_option("--screen", screen_name, "float|exact|none");
  search_cmd->add_option("--tolerance", sp.tolerance, "float screen tolerance");
  search_cmd->add_option("--out", out_file, "also write the report to a file");
  search_cmd->add_option("--checkpoint", checkpoint, "checkpoint file (huge runs)");
  search_cmd->add_flag("--huge", sp.huge_ok, "allow length parameter > 33");
  search_cmd->add_flag("--force", sp.force, "allow (c,e) outside the admissible region");
  search_cmd->add_option("--max-slices", sp.max_l_slices,
                         "stop after N checkpointed chunks (resume later)");

  int max_len = 25;
  SearchParams ap;
  std::string all_screen = "exact";
  auto* all_cmd = app.add_subcommand("search-all", "search every admissible (c,e) up to a length bound");
  all_cmd->add_option("--max-len", max_len, "length parameter bound (default 25)");
  all_cmd->add_option("--workers", ap.workers, "parallel workers");
  all_cmd->add_option("--screen", all_screen, "float|exact|none");
  all_cmd->add_flag("--huge", ap.huge_ok, "allow length parameter > 33");

  std::string piece_word, piece_interval;
  auto* pieces_cmd = app.add_subcommand("pieces", "piece / non-piece test for a cyclic subword");
  pieces_cmd->add_option("--word", piece_word, "word expression")->required();
  pieces_cmd->add_option("--interval", piece_interval, "interval I..J (hexadecimal)")->required();

  std::string dec_word;
  int dec_factors = 3, dec_min = 8;
  bool dec_even = true;
  auto* dec_cmd = app.add_subcommand("decompose", "search for a product of non-pieces");
  dec_cmd->add_option("--word", dec_word, "word expression")->required();
  dec_cmd->add_option("--factors", dec_factors, "number of factors (default 3)");
  dec_cmd->add_option("--min", dec_min, "minimum factor length (default 8)");
  dec_cmd->add_flag("--even,!--no-even", dec_even, "require even factor lengths");

  std::string verify_what;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("what", verify_what, "table1|table2|bounds|repcheck|all")->required();

  std::string fig_which;
  double fig_from = 0.0, fig_to = 1.5, fig_step = 0.01;
  auto* fig_cmd = app.add_subcommand("figure-data", "CSV samples of f, g or sigma0");
  fig_cmd->add_option("--which", fig_which, "f|g|sigma0")->required();
  fig_cmd->add_option("--from", fig_from, "range start");
  fig_cmd->add_option("--to", fig_to, "range end");
  fig_cmd->add_option("--step", fig_step, "sample step")->required();

  try {
    app.parse(argc, argv);

    auto parse_screen = [](const std::string& s) {
      if (s == "float") return ScreenMode::Float;
      if (s == "exact") return ScreenMode::Exact;
      if (s == "none") return ScreenMode::None;
      throw CLI::ValidationError("--screen float|exact|none");
    };

    if (app.got_subcommand(trace_cmd)) return cmd_trace(word_expr, blocks);
    if (app.got_subcommand(canon_cmd)) return cmd_canon(canon_blocks);
    if (app.got_subcommand(search_cmd)) {
      sp.screen = parse_screen(screen_name);
      if (sp.huge_ok && checkpoint.empty())
        checkpoint = "search_c" + std::to_string(sp.c) + "_e" +
                     std::to_string(sp.e) + ".ckpt";
      sp.checkpoint_path = checkpoint;
      emit_report(run_search(sp), !no_timing, out_file);
      return kExitOk;
    }
    if (app.got_subcommand(all_cmd)) {
      ap.screen = parse_screen(all_screen);
      for (const SearchReport& rep : search_all(max_len, ap))
        write_report(std::cout, rep, !no_timing);
      return kExitOk;
    }
    if (app.got_subcommand(pieces_cmd)) return cmd_pieces(piece_word, piece_interval);
    if (app.got_subcommand(dec_cmd))
      return cmd_decompose(dec_word, dec_factors, dec_min, dec_even);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_what);
    if (app.got_subcommand(fig_cmd))
      return cmd_figure_data(fig_which, fig_from, fig_to, fig_step);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
