#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <set>

#include "rankgray/hypergraph.hpp"

using namespace rankgray;

static std::vector<Hyperedge> as_set(const Hypergraph& h) {
  std::vector<Hyperedge> edges = h.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

static bool prefix_property(const std::vector<Hyperedge>& order) {
  if (order.empty()) return true;
  std::set<PairV> covered(order[0].begin(), order[0].end());
  for (size_t i = 1; i < order.size(); ++i) {
    int shared = 0;
    for (const PairV& p : order[i]) shared += static_cast<int>(covered.count(p));
    if (shared != 1) return false;
    covered.insert(order[i].begin(), order[i].end());
  }
  return true;
}

TEST_CASE("triangle is rotation invariant") {
  CHECK(triangle(1, 2, 3) == triangle(2, 3, 1));
  CHECK(triangle(1, 2, 3) == triangle(3, 1, 2));
  CHECK(triangle(1, 2, 3) != triangle(3, 2, 1));
  CHECK(canonical_triple(triangle(5, 3, 4)) == std::array<int, 3>{3, 4, 5});
  CHECK(canonical_triple(triangle(3, 2, 1)) == std::array<int, 3>{1, 3, 2});
  CHECK_THROWS_AS(triangle(1, 1, 2), std::invalid_argument);
}

TEST_CASE("base family for n = 3 and n = 4") {
  Hypergraph h3 = build_acyclic(3);
  std::vector<Hyperedge> want{triangle(3, 2, 1), triangle(1, 2, 3)};
  std::sort(want.begin(), want.end());
  CHECK(as_set(h3) == want);

  Hypergraph h4 = build_acyclic(4);
  CHECK(h4.edges.size() == 5);
  auto s4 = as_set(h4);
  for (const Hyperedge& e : {triangle(1, 2, 4), triangle(2, 3, 4), triangle(3, 1, 4)})
    CHECK(std::binary_search(s4.begin(), s4.end(), e));
}

TEST_CASE("inductive family: counts, acyclicity, two components") {
  for (int n = 3; n <= 12; ++n) {
    Hypergraph h = build_acyclic(n);
    CHECK(h.edges.size() == static_cast<size_t>((n * n - n - 2) / 2));
    CHECK(is_acyclic(h));
    CHECK(components_count(h) == 2);
  }
  // the small component is the reversed base triangle
  auto comps = components(build_acyclic(9));
  CHECK(comps.size() == 2);
  const auto& small = comps[0].size() < comps[1].size() ? comps[0] : comps[1];
  CHECK(small == std::vector<PairV>{{1, 3}, {2, 1}, {3, 2}});
}

TEST_CASE("closed form equals the inductive family") {
  for (int n = 3; n <= 12; ++n) CHECK(as_set(closed_form(n)) == as_set(build_acyclic(n)));
}

TEST_CASE("connected variant fuses the two components") {
  Hypergraph h = build_connected(5, {2, 1, 4, 5, 3});
  CHECK(h.edges.size() == 8);
  CHECK(h.edges[0] ==
        Hyperedge{{1, 3}, {2, 1}, {3, 2}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(is_connected(h));
  CHECK(is_acyclic(h));

  for (int n = 5; n <= 12; ++n) {
    std::array<int, 5> tuple{n - 4, n - 3, n - 2, n - 1, n};
    Hypergraph g = build_connected(n, tuple);
    CHECK(g.edges.size() == static_cast<size_t>((n * n - n - 4) / 2));
    CHECK(is_connected(g));
    CHECK(is_acyclic(g));
  }

  Hypergraph g9 = build_connected(9, {5, 6, 7, 8, 9});
  CHECK(g9.edges.size() == 34);
  auto comps = components(g9);
  CHECK(comps.size() == 1);
  CHECK(comps[0].size() == 72);

  CHECK_THROWS_AS(build_connected(4, {1, 2, 3, 4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_connected(7, {1, 2, 3, 4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_connected(7, {1, 2, 3, 4, 9}), std::invalid_argument);
}

TEST_CASE("edge ordering starts at the 6-edge and grows one shared vertex at a time") {
  for (int n : {5, 7, 9}) {
    Hypergraph h = build_connected(n, {n - 4, n - 3, n - 2, n - 1, n});
    auto order = order_hyperedges(h);
    CHECK(order.size() == h.edges.size());
    CHECK(order[0].size() == 6);
    CHECK(prefix_property(order));
  }
  CHECK_THROWS_AS(order_hyperedges(build_acyclic(7)), std::invalid_argument);
}

TEST_CASE("sharing two vertices is a cycle") {
  Hypergraph h;
  h.n = 3;
  h.edges.push_back(Hyperedge{{1, 2}, {2, 3}, {3, 1}});
  h.edges.push_back(Hyperedge{{1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_acyclic(h));
}

TEST_CASE("no edges means every pair vertex is its own component") {
  Hypergraph h;
  h.n = 3;
  CHECK(components_count(h) == 6);
  CHECK_FALSE(is_connected(h));
}

TEST_CASE("dump format") {
  CHECK(dump(build_acyclic(3)) == "1,2 ; 2,3 ; 3,1\n1,3 ; 2,1 ; 3,2\n");
  std::string d5 = dump(build_connected(5, {2, 1, 4, 5, 3}));
  CHECK(d5.substr(0, d5.find('\n')) == "1,3 ; 2,1 ; 3,2 ; 3,4 ; 4,5 ; 5,3");
}

TEST_CASE("n = 5 ordering matches the golden file") {
  Hypergraph h = build_connected(5, {1, 2, 3, 4, 5});
  std::ifstream in(std::string(TEST_DATA_DIR) + "/hypergraph_n5_order.txt");
  REQUIRE(in.good());
  std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(dump(h) == golden);
}
