#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankgray/analysis.hpp"
#include "rankgray/hamgen.hpp"
#include "rankgray/hypergraph.hpp"
#include "rankgray/io.hpp"
#include "rankgray/search.hpp"
#include "rankgray/verify.hpp"

using namespace rankgray;

namespace {

// stdout carries data; --out redirects it to a file written atomically
void emit(const std::string& payload, const std::string& out) {
  if (out.empty())
    std::cout << payload;
  else
    write_atomic(out, payload);
}

int cmd_gen(int n, const std::string& out, const std::string& format, int threads) {
  if (format == "perms" && n > 9) {
    std::cerr << "gen: --format perms is limited to n <= 9\n";
    return 2;
  }
  GenSequence seq = generate(n);
  SnakeReport rep = verify_snake(seq, WalkMode::An, threads);
  if (!(rep.is_cycle && rep.is_hamiltonian_in_An && rep.snake_ok())) {
    std::cerr << "gen: internal verification failed\n" << report_text(rep);
    return 4;
  }
  std::string payload;
  if (format == "seq")
    payload = format_sequence(seq);
  else if (format == "succ")
    payload = format_cover(SuccessorCover::from_sequences(n, {seq}));
  else
    payload = format_perms(seq);
  emit(payload, out);
  std::cerr << "gen: n=" << n << " length=" << seq.gens.size() << " verified\n";
  return 0;
}

int cmd_verify(const std::string& in, const std::string& mode, bool json, int threads) {
  GenSequence seq = in.empty() ? parse_sequence(std::cin) : load_sequence(in);
  SnakeReport rep = verify_snake(seq, mode == "sn" ? WalkMode::Sn : WalkMode::An,
                                 threads);
  std::cout << (json ? report_json(rep) : report_text(rep));
  if (!rep.snake_ok()) {
    std::cerr << "verify: walk is not a snake\n";
    return 5;
  }
  return 0;
}

int cmd_search(int n, const std::vector<int>& gens, uint64_t max_nodes,
               double max_seconds, const std::string& out) {
  SearchBudget budget;
  budget.max_nodes = max_nodes;
  budget.max_seconds = max_seconds;
  SearchResult r = longest_snake(n, gens, budget);
  std::cerr << "search: best_length=" << r.best_length
            << " exact=" << (r.exact ? "yes" : "no") << " nodes=" << r.nodes << "\n";
  emit(format_sequence(r.witness), out);
  if (!r.exact) {
    std::cerr << "search: budget exhausted before the space was\n";
    return 6;
  }
  return 0;
}

int cmd_rankin(int n, const std::vector<int>& gens) {
  if (n < 3 || n > 20)
    throw std::invalid_argument("rankin: n must be in 3..20");
  for (int g : gens)
    if (g < 3 || g > n || g % 2 == 0)
      throw std::invalid_argument(
          "rankin: generators must be odd jump sizes in 3..n (even jumps leave the "
          "alternating group)");
  if (gens[0] == gens[1])
    throw std::invalid_argument("rankin: need two distinct generators");
  const uint64_t size = half_factorial(n);
  const int k = gens[0], l = gens[1];
  const uint64_t q = static_cast<uint64_t>(k > l ? k - l : l - k) + 1;
  bool any = false;
  std::cout << "group: A_" << n << " order " << size << "\n";
  for (int a : {k, l}) {
    bool ex = rankin_excludes(size, a, q);
    any = any || ex;
    std::cout << "tau_" << a << ": order " << a << ", ratio order " << q
              << ", quotient " << size / a << " -> "
              << (ex ? "obstruction" : "no obstruction") << "\n";
  }
  std::cout << "hamiltonian cycle excluded: " << (any ? "yes" : "no") << "\n";
  return 0;
}

int cmd_hypergraph(int n, bool connected, const std::string& out) {
  Hypergraph h;
  size_t expect;
  if (connected) {
    h = build_connected(n, {n - 4, n - 3, n - 2, n - 1, n});
    expect = static_cast<size_t>(n) * (n - 1) / 2 - 2;
  } else {
    h = build_acyclic(n);
    expect = static_cast<size_t>(n) * (n - 1) / 2 - 1;
  }
  bool shape_ok = is_acyclic(h) && h.edges.size() == expect &&
                  (connected ? is_connected(h) : components_count(h) == 2);
  if (!shape_ok) {
    std::cerr << "hypergraph: structural self-check failed\n";
    return 4;
  }
  emit(dump(h), out);
  std::cerr << "hypergraph: n=" << n << " edges=" << h.edges.size()
            << (connected ? " connected" : " two components") << " acyclic\n";
  return 0;
}

int cmd_m6(const std::string& out, int threads) {
  GenSequence seq = m6_cycle();
  SnakeReport rep = verify_snake(seq, WalkMode::Sn, threads);
  if (!(rep.is_cycle && rep.length == 315 && rep.snake_ok())) {
    std::cerr << "m6: internal verification failed\n" << report_text(rep);
    return 4;
  }
  emit(format_sequence(seq), out);
  std::cerr << "m6: length=315 verified in S_6\n";
  return 0;
}

int cmd_bound(int n) {
  std::cout << upper_bound(n) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian snake cycles of the alternating group under jump-to-front "
               "generators"};
  app.require_subcommand(1);

  int n = 0, threads = 0;
  std::string out, format = "seq", mode = "an", in_path;
  bool json = false, connected = false;
  std::vector<int> gens;
  uint64_t max_nodes = 0;
  double max_seconds = 0;

  CLI::App* gen = app.add_subcommand("gen", "generate a Hamiltonian snake cycle of A_n");
  gen->add_option("--n", n, "number of symbols (odd, 7 or more)")->required();
  gen->add_option("--out", out, "write output to this file atomically");
  gen->add_option("--format", format, "output layout")
      ->check(CLI::IsMember({"seq", "succ", "perms"}));
  gen->add_option("--threads", threads, "verifier threads (0 = auto)");

  CLI::App* ver = app.add_subcommand("verify", "check a generator walk for the snake "
                                               "property");
  ver->add_option("--in", in_path, "sequence file (default: stdin)");
  ver->add_option("--mode", mode, "an: walk must stay in A_n; sn: any parity")
      ->check(CLI::IsMember({"an", "sn"}));
  ver->add_flag("--json", json, "emit the report as JSON");
  ver->add_option("--threads", threads, "verifier threads (0 = auto)");

  CLI::App* sea = app.add_subcommand("search", "exhaustive longest-snake search from "
                                               "the identity");
  sea->add_option("--n", n, "number of symbols")->required();
  sea->add_option("--gens", gens, "jump sizes, e.g. 3,5")->required()->delimiter(',');
  sea->add_option("--max-nodes", max_nodes, "node budget (0 = unlimited)");
  sea->add_option("--max-seconds", max_seconds, "time budget (0 = unlimited)");
  sea->add_option("--out", out, "write the witness to this file atomically");

  CLI::App* ran = app.add_subcommand("rankin", "parity obstruction for a two-generator "
                                               "Cayley digraph of A_n");
  ran->add_option("--n", n, "number of symbols")->required();
  ran->add_option("--gens", gens, "two odd jump sizes, e.g. 3,5")
      ->required()
      ->delimiter(',')
      ->expected(2);

  CLI::App* hyp = app.add_subcommand("hypergraph", "dump the pair-linkage hypergraph");
  hyp->add_option("--n", n, "number of symbols")->required();
  hyp->add_flag("--connected", connected, "fuse two triangles into the 6-edge variant");
  hyp->add_option("--out", out, "write output to this file atomically");

  CLI::App* m6 = app.add_subcommand("m6", "emit the 315-step snake through S_6");
  m6->add_option("--out", out, "write output to this file atomically");
  m6->add_option("--threads", threads, "verifier threads (0 = auto)");

  CLI::App* bnd = app.add_subcommand("bound", "print the snake-length ceiling n!/2");
  bnd->add_option("--n", n, "number of symbols")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(n, out, format, threads);
    if (ver->parsed()) return cmd_verify(in_path, mode, json, threads);
    if (sea->parsed()) return cmd_search(n, gens, max_nodes, max_seconds, out);
    if (ran->parsed()) return cmd_rankin(n, gens);
    if (hyp->parsed()) return cmd_hypergraph(n, connected, out);
    if (m6->parsed()) return cmd_m6(out, threads);
    if (bnd->parsed()) return cmd_bound(n);
  } catch (const unsupported_n& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
