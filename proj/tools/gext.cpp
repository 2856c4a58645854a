// gext: Ext groups and syzygies of rank 1 modules from their rims.
//
// Exit codes: 0 ok, 2 usage or input, 3 verification mismatch, 4 I/O,
// 5 size cap exceeded.

#include <iostream>

#include "CLI11.hpp"
#include "gext/commands.hpp"

namespace {

void add_nk(CLI::App* sub, int& n, int& k) {
  sub->add_option("--n", n, "number of vertices on the circle")->required();
  sub->add_option("--k", k, "rim size")->required();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gext::cli;

  CLI::App app{"Ext groups, syzygies and periods of rank 1 modules given by k-subset rims"};
  app.require_subcommand(1);

  PeriodOptions period;
  auto* period_cmd = app.add_subcommand("period", "period of the minimal projective resolution");
  add_nk(period_cmd, period.n, period.k);
  period_cmd->add_option("--rim", period.rim, "comma-separated ascending labels")->required();
  period_cmd->add_flag("--verify", period.verify, "cross-check by cycling syzygies");
  period_cmd->add_flag("--json", period.json, "structured output");

  ExtOptions ext;
  auto* ext_cmd = app.add_subcommand("ext", "Ext^d(L_I, L_J) as an F[t]-module");
  add_nk(ext_cmd, ext.n, ext.k);
  ext_cmd->add_option("--rim-i", ext.rim_i)->required();
  ext_cmd->add_option("--rim-j", ext.rim_j)->required();
  ext_cmd->add_option("--degree", ext.degree, "degree d >= 1")->capture_default_str();
  ext_cmd->add_flag("--verify", ext.verify, "cross-check against an independent computation");
  ext_cmd->add_flag("--json", ext.json, "structured output");

  PairOptions word;
  auto* word_cmd = app.add_subcommand("word", "LR trapezium word of two rims");
  add_nk(word_cmd, word.n, word.k);
  word_cmd->add_option("--rim-i", word.rim_i)->required();
  word_cmd->add_option("--rim-j", word.rim_j)->required();
  word_cmd->add_flag("--json", word.json, "structured output");

  PairOptions matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "presentation matrix D, or D* when --rim-j is given");
  add_nk(matrix_cmd, matrix.n, matrix.k);
  matrix_cmd->add_option("--rim-i", matrix.rim_i)->required();
  matrix_cmd->add_option("--rim-j", matrix.rim_j);
  matrix_cmd->add_flag("--json", matrix.json, "structured output");

  TableOptions table;
  auto* table_cmd = app.add_subcommand("table", "dim Ext^1 for every pair of k-subsets (cap: GEXT_MAX_N, default 12)");
  add_nk(table_cmd, table.n, table.k);
  table_cmd->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  PairOptions render;
  auto* render_cmd = app.add_subcommand("render", "SVG drawing of one or two rims");
  add_nk(render_cmd, render.n, render.k);
  render_cmd->add_option("--rim-i", render.rim_i)->required();
  render_cmd->add_option("--rim-j", render.rim_j);
  render_cmd->add_option("--out", render.out, "output file, stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInput;
  }

  const Streams io{std::cout, std::cerr};
  if (*period_cmd) return run_period(period, io);
  if (*ext_cmd) return run_ext(ext, io);
  if (*word_cmd) return run_word(word, io);
  if (*matrix_cmd) return run_matrix(matrix, io);
  if (*table_cmd) return run_table(table, io);
  return run_render(render, io);
}
