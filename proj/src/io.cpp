#include "rankgray/io.hpp"

#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rankgray/perm.hpp"

namespace rankgray {

namespace {

int parse_n_line(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("missing n= header line");
  if (line.size() > 1 && line.back() == '\r') line.pop_back();
  if (line.rfind("n=", 0) != 0)
    throw std::invalid_argument("first line must be n=<count>, got: " + line);
  size_t pos = 2;
  int n = 0;
  if (pos >= line.size()) throw std::invalid_argument("empty n= value");
  for (; pos < line.size(); ++pos) {
    if (line[pos] < '0' || line[pos] > '9')
      throw std::invalid_argument("n= value is not a number: " + line);
    n = n * 10 + (line[pos] - '0');
    if (n > 1000) break;
  }
  if (n < 1 || n > kMaxN)
    throw std::invalid_argument("n out of range 1.." + std::to_string(kMaxN));
  return n;
}

}  // namespace

std::string format_sequence(const GenSequence& seq) {
  std::ostringstream os;
  os << "n=" << seq.n << "\n" << seq.start.str() << "\n";
  for (size_t i = 0; i < seq.gens.size(); ++i) {
    if (i) os << ' ';
    os << int(seq.gens[i]);
  }
  os << "\n";
  return os.str();
}

GenSequence parse_sequence(std::istream& in) {
  GenSequence seq;
  seq.n = parse_n_line(in);
  std::vector<int> vals(seq.n);
  for (int i = 0; i < seq.n; ++i)
    if (!(in >> vals[i]))
      throw std::invalid_argument("start permutation needs " + std::to_string(seq.n) +
                                  " entries");
  seq.start = Perm::of(vals);
  long g;
  while (in >> g) {
    if (g < 2 || g > seq.n)
      throw std::invalid_argument("generator index " + std::to_string(g) +
                                  " outside 2..n");
    seq.gens.push_back(static_cast<uint8_t>(g));
  }
  if (!in.eof()) throw std::invalid_argument("trailing junk after generator list");
  return seq;
}

GenSequence load_sequence(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open " + path);
  return parse_sequence(f);
}

std::string format_cover(const SuccessorCover& cover) {
  std::ostringstream os;
  os << "n=" << cover.n() << "\n";
  for (uint8_t g : cover.raw()) os << int(g) << "\n";
  return os.str();
}

SuccessorCover parse_cover(std::istream& in) {
  int n = parse_n_line(in);
  uint64_t size = half_factorial(n);
  std::vector<uint8_t> succ;
  succ.reserve(size);
  long g;
  while (in >> g) {
    if (g < 2 || g > n)
      throw std::invalid_argument("successor generator " + std::to_string(g) +
                                  " outside 2..n");
    if (succ.size() == size) throw std::invalid_argument("more entries than n!/2");
    succ.push_back(static_cast<uint8_t>(g));
  }
  if (!in.eof()) throw std::invalid_argument("trailing junk after successor list");
  if (succ.size() != size)
    throw std::invalid_argument("expected " + std::to_string(size) + " entries, got " +
                                std::to_string(succ.size()));
  return SuccessorCover(n, std::move(succ));
}

std::string format_perms(const GenSequence& seq) {
  std::ostringstream os;
  Perm cur = seq.start;
  for (uint8_t g : seq.gens) {
    os << cur.str() << "\n";
    cur = apply_tau(cur, g);
  }
  if (seq.gens.empty() || !(cur == seq.start)) os << cur.str() << "\n";
  return os.str();
}

std::string report_text(const SnakeReport& rep) {
  std::ostringstream os;
  os << "length: " << rep.length << "\n";
  os << "cycle: " << (rep.is_cycle ? "yes" : "no") << "\n";
  os << "hamiltonian_in_An: " << (rep.is_hamiltonian_in_An ? "yes" : "no") << "\n";
  os << "min_pairwise_kendall_ok: " << (rep.min_pairwise_kendall_ok ? "yes" : "no")
     << "\n";
  os << "generators:";
  for (const auto& [k, c] : rep.generator_histogram) os << " " << k << ":" << c;
  os << "\n";
  os << "violations: " << rep.violations.size()
     << (rep.violations.size() >= 1000 ? " (capped)" : "") << "\n";
  for (const auto& v : rep.violations)
    os << "  [" << v.a << "," << v.b << "] " << v.reason << "\n";
  return os.str();
}

std::string report_json(const SnakeReport& rep) {
  nlohmann::json j;
  j["length"] = rep.length;
  j["is_cycle"] = rep.is_cycle;
  j["is_hamiltonian_in_An"] = rep.is_hamiltonian_in_An;
  j["min_pairwise_kendall_ok"] = rep.min_pairwise_kendall_ok;
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, c] : rep.generator_histogram) hist[std::to_string(k)] = c;
  j["generator_histogram"] = hist;
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : rep.violations)
    viols.push_back({{"a", v.a}, {"b", v.b}, {"reason", v.reason}});
  j["violations"] = viols;
  return j.dump(2) + "\n";
}

void write_atomic(const std::string& path, const std::string& data) {
  std::string tmp = path + ".tmp." + std::to_string(getpid());
  std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
  if (!f) throw io_error("cannot create " + tmp);
  f << data;
  f.flush();
  if (!f) {
    std::remove(tmp.c_str());
    throw io_error("short write to " + tmp);
  }
  f.close();
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw io_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace rankgray
