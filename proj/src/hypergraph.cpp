#include "rankgray/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rankgray {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // false if x and y were already connected
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = x;
    return true;
  }
};

void check_pair(const PairV& p, int n) {
  if (p.a < 1 || p.a > n || p.b < 1 || p.b > n || p.a == p.b)
    throw std::invalid_argument("hypergraph: bad pair vertex");
}

int pair_id(const PairV& p, int n) { return (p.a - 1) * n + (p.b - 1); }

}  // namespace

Hyperedge triangle(int a, int b, int c) {
  if (a == b || b == c || a == c) throw std::invalid_argument("triangle: elements must differ");
  Hyperedge e{{a, b}, {b, c}, {c, a}};
  std::sort(e.begin(), e.end());
  return e;
}

std::array<int, 3> canonical_triple(const Hyperedge& e) {
  if (e.size() != 3) throw std::invalid_argument("canonical_triple: not a 3-edge");
  std::map<int, int> next;
  for (const PairV& p : e) next[p.a] = p.b;
  int first = next.begin()->first;
  int second = next.at(first);
  int third = next.at(second);
  if (next.size() != 3 || next.at(third) != first)
    throw std::invalid_argument("canonical_triple: pairs do not form a 3-cycle");
  return {first, second, third};
}

Hypergraph build_acyclic(int n) {
  if (n < 3) throw std::invalid_argument("build_acyclic: needs n >= 3");
  Hypergraph h;
  h.n = n;
  h.edges.push_back(triangle(3, 2, 1));
  h.edges.push_back(triangle(1, 2, 3));
  for (int m = 4; m <= n; ++m)
    for (int i = 1; i < m; ++i) h.edges.push_back(triangle(i, i % (m - 1) + 1, m));
  return h;
}

Hypergraph closed_form(int n) {
  if (n < 3) throw std::invalid_argument("closed_form: needs n >= 3");
  Hypergraph h;
  h.n = n;
  for (int c = 3; c <= n; ++c)
    for (int a = 1; a < c; ++a) h.edges.push_back(triangle(a, a % (c - 1) + 1, c));
  return h;
}

Hypergraph build_connected(int n, std::array<int, 5> tuple) {
  if (n < 5) throw std::invalid_argument("build_connected: needs n >= 5");
  {
    std::set<int> distinct(tuple.begin(), tuple.end());
    if (distinct.size() != 5 || *distinct.begin() < 1 || *distinct.rbegin() > n)
      throw std::invalid_argument("build_connected: tuple must be 5 distinct elements of [n]");
  }

  Hypergraph h = build_acyclic(n);
  Hyperedge t1 = triangle(2, 1, 3);
  Hyperedge t2 = triangle(4, 5, 3);
  auto drop = [&h](const Hyperedge& e) {
    auto it = std::find(h.edges.begin(), h.edges.end(), e);
    if (it == h.edges.end()) throw std::logic_error("build_connected: expected triangle missing");
    h.edges.erase(it);
  };
  drop(t1);
  drop(t2);
  Hyperedge fused = t1;
  fused.insert(fused.end(), t2.begin(), t2.end());
  std::sort(fused.begin(), fused.end());
  h.edges.insert(h.edges.begin(), fused);

  // Relabel ground elements: (2,1,4,5,3) -> tuple, the rest kept in
  // increasing order on the remaining values.
  std::vector<int> phi(n + 1, 0);
  phi[2] = tuple[0];
  phi[1] = tuple[1];
  phi[4] = tuple[2];
  phi[5] = tuple[3];
  phi[3] = tuple[4];
  std::vector<bool> used(n + 1, false);
  for (int x : tuple) used[x] = true;
  int next_free = 1;
  for (int x = 6; x <= n; ++x) {
    while (used[next_free]) ++next_free;
    phi[x] = next_free;
    used[next_free] = true;
  }
  for (Hyperedge& e : h.edges) {
    for (PairV& p : e) p = {phi[p.a], phi[p.b]};
    std::sort(e.begin(), e.end());
  }
  return h;
}

bool is_acyclic(const Hypergraph& h) {
  UnionFind uf(h.n * h.n + static_cast<int>(h.edges.size()));
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (const PairV& p : h.edges[i]) {
      check_pair(p, h.n);
      if (!uf.unite(pair_id(p, h.n), h.n * h.n + static_cast<int>(i))) return false;
    }
  return true;
}

int components_count(const Hypergraph& h) {
  UnionFind uf(h.n * h.n + static_cast<int>(h.edges.size()));
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (const PairV& p : h.edges[i]) {
      check_pair(p, h.n);
      uf.unite(pair_id(p, h.n), h.n * h.n + static_cast<int>(i));
    }
  std::set<int> roots;
  for (int a = 1; a <= h.n; ++a)
    for (int b = 1; b <= h.n; ++b)
      if (a != b) roots.insert(uf.find(pair_id({a, b}, h.n)));
  return static_cast<int>(roots.size());
}

bool is_connected(const Hypergraph& h) { return components_count(h) == 1; }

std::vector<std::vector<PairV>> components(const Hypergraph& h) {
  UnionFind uf(h.n * h.n + static_cast<int>(h.edges.size()));
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (const PairV& p : h.edges[i]) {
      check_pair(p, h.n);
      uf.unite(pair_id(p, h.n), h.n * h.n + static_cast<int>(i));
    }
  std::map<int, std::vector<PairV>> by_root;
  for (int a = 1; a <= h.n; ++a)
    for (int b = 1; b <= h.n; ++b)
      if (a != b) by_root[uf.find(pair_id({a, b}, h.n))].push_back({a, b});
  std::vector<std::vector<PairV>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

namespace {

// Ordering key: 3-edges by canonical triple, anything else by its sorted
// pair list (in practice only the 6-edge, which starts the order anyway).
struct EdgeKey {
  int rank;
  std::array<int, 3> triple;
  Hyperedge pairs;
  auto operator<=>(const EdgeKey&) const = default;
};

EdgeKey edge_key(const Hyperedge& e) {
  if (e.size() == 3) return {0, canonical_triple(e), {}};
  return {1, {}, e};
}

}  // namespace

std::vector<Hyperedge> order_hyperedges(const Hypergraph& h) {
  if (h.edges.empty()) return {};
  if (!is_acyclic(h)) throw std::invalid_argument("order_hyperedges: hypergraph has a cycle");

  size_t start = 0;
  size_t six_count = 0;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    if (h.edges[i].size() > 3) {
      start = i;
      ++six_count;
    }
  }
  if (six_count > 1) throw std::invalid_argument("order_hyperedges: more than one 6-edge");
  if (six_count == 0)
    start = static_cast<size_t>(
        std::min_element(h.edges.begin(), h.edges.end(),
                         [](const Hyperedge& x, const Hyperedge& y) {
                           return edge_key(x) < edge_key(y);
                         }) -
        h.edges.begin());

  // vertex -> incident edge indices, sorted by key for determinism
  std::map<PairV, std::vector<size_t>> incident;
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (const PairV& p : h.edges[i]) incident[p].push_back(i);
  for (auto& [p, list] : incident)
    std::sort(list.begin(), list.end(),
              [&h](size_t x, size_t y) { return edge_key(h.edges[x]) < edge_key(h.edges[y]); });

  std::vector<bool> seen(h.edges.size(), false);
  std::vector<Hyperedge> out;
  std::deque<size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    out.push_back(h.edges[i]);
    for (const PairV& p : h.edges[i])  // pairs already sorted within the edge
      for (size_t j : incident[p])
        if (!seen[j]) {
          seen[j] = true;
          queue.push_back(j);
        }
  }
  if (out.size() != h.edges.size())
    throw std::invalid_argument("order_hyperedges: hypergraph is not connected");
  return out;
}

std::string dump(const Hypergraph& h) {
  bool has_six = std::any_of(h.edges.begin(), h.edges.end(),
                             [](const Hyperedge& e) { return e.size() > 3; });
  std::vector<Hyperedge> ordered;
  if (has_six && is_acyclic(h) && is_connected(h)) {
    ordered = order_hyperedges(h);
  } else {
    ordered = h.edges;
    for (Hyperedge& e : ordered) std::sort(e.begin(), e.end());
    std::sort(ordered.begin(), ordered.end());
  }
  std::ostringstream os;
  for (const Hyperedge& e : ordered) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (i) os << " ; ";
      os << e[i].a << ',' << e[i].b;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace rankgray
