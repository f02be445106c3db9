// Times the serial snake verifier against the chunked OpenMP one on a
// generated cycle and checks that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rankgray/hamgen.hpp"
#include "rankgray/verify.hpp"

using namespace rankgray;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

bool reports_equal(const SnakeReport& a, const SnakeReport& b) {
  return a.length == b.length && a.is_cycle == b.is_cycle &&
         a.is_hamiltonian_in_An == b.is_hamiltonian_in_An &&
         a.min_pairwise_kendall_ok == b.min_pairwise_kendall_ok &&
         a.generator_histogram == b.generator_histogram && a.violations == b.violations;
}

}  // namespace

int main(int argc, char** argv) {
  int n = 9;
  int repeats = 3;
  std::vector<int> threads = {1, 2, 4};

  CLI::App app{"benchmark the snake verifier"};
  app.add_option("--n", n, "number of symbols for the generated cycle (odd, >= 7)");
  app.add_option("--repeats", repeats, "timing repetitions per configuration")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "thread counts to benchmark")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  GenSequence seq;
  try {
    seq = generate(n);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  std::printf("n=%d  walk length=%zu\n", n, seq.gens.size());

  auto best_of = [&](auto&& fn, SnakeReport& rep) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
      double t0 = now_s();
      rep = fn();
      double dt = now_s() - t0;
      if (dt < best) best = dt;
    }
    return best;
  };

  SnakeReport ref;
  double ts = best_of([&] { return verify_snake_serial(seq, WalkMode::An); }, ref);
  if (!ref.is_hamiltonian_in_An || !ref.snake_ok()) {
    std::fprintf(stderr, "error: reference verifier rejected the generated cycle\n");
    return 4;
  }
  std::printf("%-18s %8.3fs\n", "serial reference", ts);

  bool all_match = true;
  for (int t : threads) {
    SnakeReport rep;
    double tp = best_of([&] { return verify_snake(seq, WalkMode::An, t); }, rep);
    bool match = reports_equal(rep, ref);
    all_match = all_match && match;
    std::printf("chunked T=%-8d %8.3fs   x%.2f   %s\n", t, tp, ts / tp,
                match ? "report ok" : "REPORT MISMATCH");
  }
  return all_match ? 0 : 4;
}
