#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "debruijn/counting.hpp"
#include "debruijn/errors.hpp"
#include "debruijn/poset.hpp"
#include "debruijn/verify.hpp"
#include "debruijn/weight_range.hpp"
#include "debruijn/word.hpp"

namespace {

using namespace debruijn;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

std::string render(const std::vector<Letter>& letters, std::uint32_t alphabet,
                   const std::string& format) {
  if (format == "digits") return to_digit_string(letters, alphabet);
  if (format == "csv") return to_csv_string(letters);
  // auto: digit string for small alphabets, comma-separated otherwise
  return alphabet <= 10 ? to_digit_string(letters, alphabet) : to_csv_string(letters);
}

struct GenOptions {
  std::string format = "auto";
  ResourceLimits limits;
};

void add_gen_options(CLI::App* cmd, GenOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"auto", "digits", "csv"}));
  cmd->add_option("--max-vertices", opts.limits.max_vertices,
                  "Largest vertex count the generator will touch")
      ->capture_default_str();
  cmd->add_option("--max-cycle-length", opts.limits.max_cycle_length,
                  "Longest cycle the generator will emit")
      ->capture_default_str();
}

std::string format_vertex(const Word& w) {
  return "{" + to_csv_string(w.letters()) + "}";
}

void print_walk_trace(const Walk& walk, const WeightRangeParams& p) {
  for (const WalkTraceRow& row : walk_trace(walk, p)) {
    std::cout << format_vertex(row.vertex) << " " << row.vertex_weight;
    if (row.danger) std::cout << ", D";
    std::cout << "\n";
    if (row.edge_weight >= 0) {
      std::cout << "↓ " << row.edge_weight << "\n";
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{
      "Construction, verification, and decoding of de Bruijn cycles for "
      "k-ary words, weight-bounded words, and poset assignments"};
  app.require_subcommand(1);
  app.add_flag("--seedless",
               "Accepted for compatibility; output is always deterministic");

  // gen-debruijn
  auto* gen_db = app.add_subcommand("gen-debruijn",
                                    "Cycle of all k-ary words of length n");
  std::int64_t db_k = 0, db_n = 0;
  GenOptions db_opts;
  gen_db->add_option("--k", db_k, "Alphabet size")->required();
  gen_db->add_option("--n", db_n, "Word length")->required();
  add_gen_options(gen_db, db_opts);

  // gen-weight-range
  auto* gen_wr = app.add_subcommand(
      "gen-weight-range", "Cycle of all n-letter words with weight in [s, t]");
  std::int64_t wr_n = 0, wr_k = 0, wr_s = 0, wr_t = 0;
  GenOptions wr_opts;
  gen_wr->add_option("--n", wr_n, "Word length")->required();
  gen_wr->add_option("--k", wr_k, "Alphabet size")->required();
  gen_wr->add_option("--s", wr_s, "Lower weight bound")->required();
  gen_wr->add_option("--t", wr_t, "Upper weight bound")->required();
  add_gen_options(gen_wr, wr_opts);

  // gen-poset
  auto* gen_po = app.add_subcommand(
      "gen-poset", "Cycle of all assignments of {1..n} to a poset's elements");
  std::string po_file;
  std::int64_t po_n = 0;
  GenOptions po_opts;
  gen_po->add_option("--poset", po_file, "Poset file")->required();
  gen_po->add_option("--n", po_n, "Number of ground elements")->required();
  add_gen_options(gen_po, po_opts);

  // count
  auto* count_cmd = app.add_subcommand(
      "count", "Exact counts of n-letter words over {0..k-1} by weight");
  std::int64_t c_n = 0, c_k = 0, c_s = -1, c_t = -1, c_j = -1;
  count_cmd->add_option("--n", c_n, "Word length")->required();
  count_cmd->add_option("--k", c_k, "Alphabet size")->required();
  auto* c_s_opt = count_cmd->add_option("--s", c_s, "Lower weight bound");
  auto* c_t_opt = count_cmd->add_option("--t", c_t, "Upper weight bound");
  auto* c_j_opt = count_cmd->add_option("--j", c_j, "Single weight");
  c_j_opt->excludes(c_s_opt)->excludes(c_t_opt);
  c_s_opt->needs(c_t_opt);
  c_t_opt->needs(c_s_opt);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a cycle exhaustively");
  std::string v_mode, v_cycle, v_poset_file;
  std::int64_t v_n = 0, v_k = 0, v_s = 0, v_t = 0;
  bool v_machine = false;
  verify_cmd->add_option("--mode", v_mode, "weight-range or poset")
      ->required()
      ->check(CLI::IsMember({"weight-range", "poset"}));
  verify_cmd->add_option("--cycle", v_cycle, "Cycle letters")->required();
  verify_cmd->add_option("--n", v_n, "Word length / ground set size");
  verify_cmd->add_option("--k", v_k, "Alphabet size (weight-range mode)");
  verify_cmd->add_option("--s", v_s, "Lower weight bound (weight-range mode)");
  verify_cmd->add_option("--t", v_t, "Upper weight bound (weight-range mode)");
  verify_cmd->add_option("--poset", v_poset_file, "Poset file (poset mode)");
  verify_cmd->add_flag("--machine", v_machine, "Line-delimited machine output");

  // decode
  auto* decode_cmd = app.add_subcommand(
      "decode", "Decode one window of a poset cycle into element sets");
  std::string d_poset_file, d_cycle;
  std::int64_t d_n = 0, d_at = 0;
  decode_cmd->add_option("--poset", d_poset_file, "Poset file")->required();
  decode_cmd->add_option("--n", d_n, "Number of ground elements")->required();
  decode_cmd->add_option("--cycle", d_cycle, "Cycle letters")->required();
  decode_cmd->add_option("--at", d_at, "Window start position")->required();

  // path-demo
  auto* demo_cmd = app.add_subcommand(
      "path-demo", "Trace the constructive walk from a vertex to the sink");
  std::int64_t pd_n = 0, pd_k = 0, pd_s = 0, pd_t = 0;
  std::string pd_from;
  demo_cmd->add_option("--n", pd_n, "Word length")->required();
  demo_cmd->add_option("--k", pd_k, "Alphabet size")->required();
  demo_cmd->add_option("--s", pd_s, "Lower weight bound")->required();
  demo_cmd->add_option("--t", pd_t, "Upper weight bound")->required();
  demo_cmd->add_option("--from", pd_from, "Start vertex, n-1 letters")->required();

  CLI11_PARSE(app, argc, argv);

  if (gen_db->parsed()) {
    const Cycle c = generate_full(db_k, db_n, db_opts.limits);
    std::cout << render(c.letters(), c.alphabet_size(), db_opts.format) << "\n";
    return kExitPass;
  }

  if (gen_wr->parsed()) {
    const WeightRangeParams p(wr_n, wr_k, wr_s, wr_t);
    const Cycle c = eulerian_cycle(p, wr_opts.limits);
    std::cout << render(c.letters(), c.alphabet_size(), wr_opts.format) << "\n";
    return kExitPass;
  }

  if (gen_po->parsed()) {
    const Poset poset = parse_poset_file(po_file);
    const Cycle c = poset_cycle(poset, po_n, po_opts.limits);
    std::cout << render(c.letters(), c.alphabet_size(), po_opts.format) << "\n";
    const auto alphabet = antichains(poset);
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      std::cout << "letter " << i << " = " << format_antichain(poset, alphabet[i])
                << "\n";
    }
    return kExitPass;
  }

  if (count_cmd->parsed()) {
    const CountTable table(c_n, c_k);
    if (c_j_opt->count() > 0) {
      std::cout << c_j << "\t" << table.count(c_j) << "\n";
      return kExitPass;
    }
    std::int64_t lo = 0, hi = table.max_weight();
    if (c_s_opt->count() > 0) {
      lo = c_s;
      hi = c_t;
      if (lo < 0 || hi > table.max_weight() || lo > hi) {
        throw std::invalid_argument("requires 0 <= s <= t <= n(k-1)");
      }
    }
    for (std::int64_t j = lo; j <= hi; ++j) {
      std::cout << j << "\t" << table.count(j) << "\n";
    }
    std::cout << "total\t" << table.range_sum(lo, hi) << "\n";
    return kExitPass;
  }

  if (verify_cmd->parsed()) {
    bool pass = false;
    if (v_mode == "weight-range") {
      const WeightRangeParams p(v_n, v_k, v_s, v_t);
      const Cycle c(parse_letters(v_cycle, static_cast<std::uint32_t>(v_k)),
                    static_cast<std::uint32_t>(v_k), static_cast<std::size_t>(v_n));
      const CycleReport report = verify_universal_cycle(c, p);
      pass = report.pass;
      if (v_machine) {
        std::cout << "verdict\t" << (pass ? "PASS" : "FAIL") << "\n"
                  << "length\t" << report.length << "\n"
                  << "expected-length\t" << report.expected_length << "\n";
        if (!pass) std::cout << "reason\t" << report.reason << "\n";
      } else {
        std::cout << (pass ? "PASS" : "FAIL") << ": cycle of length " << report.length
                  << " for n=" << v_n << ", k=" << v_k << ", weights in [" << v_s
                  << ", " << v_t << "]\n";
        if (!pass) std::cout << "  " << report.reason << "\n";
      }
    } else {
      if (v_poset_file.empty()) {
        throw std::invalid_argument("poset mode requires --poset");
      }
      const Poset poset = parse_poset_file(v_poset_file);
      const auto alpha = static_cast<std::uint32_t>(antichains(poset).size());
      const Cycle c(parse_letters(v_cycle, alpha), alpha,
                    static_cast<std::size_t>(v_n));
      const PosetCycleReport report = verify_poset_cycle(c, poset, v_n);
      pass = report.pass;
      if (v_machine) {
        std::cout << "verdict\t" << (pass ? "PASS" : "FAIL") << "\n"
                  << "length\t" << report.length << "\n"
                  << "expected-length\t" << report.expected_length << "\n";
        if (!pass) std::cout << "reason\t" << report.reason << "\n";
      } else {
        std::cout << (pass ? "PASS" : "FAIL") << ": cycle of length " << report.length
                  << " over " << alpha << " letters, n=" << v_n << "\n";
        if (!pass) std::cout << "  " << report.reason << "\n";
      }
    }
    return pass ? kExitPass : kExitFail;
  }

  if (decode_cmd->parsed()) {
    const Poset poset = parse_poset_file(d_poset_file);
    const auto alpha = static_cast<std::uint32_t>(antichains(poset).size());
    const Cycle c(parse_letters(d_cycle, alpha), alpha,
                  static_cast<std::size_t>(d_n));
    if (d_at < 0 || d_at >= static_cast<std::int64_t>(c.length())) {
      throw std::invalid_argument("window start out of range");
    }
    const Assignment a = decode_assignment(poset, c, static_cast<std::size_t>(d_at));
    // Stacked rendering: later (higher) elements first.
    for (std::size_t i = poset.size(); i-- > 0;) {
      std::cout << poset.name_of(i) << ": {";
      const auto& members = a.member_sets[i];
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (j > 0) std::cout << ",";
        std::cout << members[j];
      }
      std::cout << "}\n";
    }
    return kExitPass;
  }

  if (demo_cmd->parsed()) {
    const WeightRangeParams p(pd_n, pd_k, pd_s, pd_t);
    const Word from(parse_letters(pd_from, static_cast<std::uint32_t>(pd_k)),
                    static_cast<std::uint32_t>(pd_k));
    if (!is_legal_vertex(from, p)) {
      throw std::invalid_argument(
          "--from must name a legal vertex: n-1 letters with weight in "
          "[max(0, s-(k-1)), t]");
    }
    const Walk walk = path_to_sink(from, p);
    print_walk_trace(walk, p);
    return kExitPass;
  }

  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
