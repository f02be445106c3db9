#pragma once

#include <array>
#include <string>
#include <vector>

namespace rankgray {

// Vertex of the linkage hypergraph: an ordered pair of distinct elements
// of [n]. Stands for the set of permutations ending with a then b.
struct PairV {
  int a = 0;
  int b = 0;
  bool operator==(const PairV&) const = default;
  auto operator<=>(const PairV&) const = default;
};

// Hyperedge: set of pair vertices, kept sorted. Triangles have three
// pairs forming a directed 3-cycle on {a, b, c}; the one 6-edge of the
// connected variant is a union of two such triangles.
using Hyperedge = std::vector<PairV>;

struct Hypergraph {
  int n = 0;
  std::vector<Hyperedge> edges;
};

// {(a,b), (b,c), (c,a)}, sorted. Rotations give the same edge.
Hyperedge triangle(int a, int b, int c);

// For a 3-edge, the defining cycle (a,b,c) rotated so the smallest
// element comes first. Used as the deterministic ordering key.
std::array<int, 3> canonical_triple(const Hyperedge& e);

// Inductive family: n = 3 gives {triangle(3,2,1), triangle(1,2,3)}; the
// step from m-1 to m adds triangle(i, i mod (m-1) + 1, m) for i < m.
// (n^2 - n - 2)/2 edges, Berge-acyclic, two connected components.
Hypergraph build_acyclic(int n);

// Same family described directly: all triangle(a,b,c) with max(a,b) < c
// and b = a mod (c-1) + 1.
Hypergraph closed_form(int n);

// build_acyclic with triangle(2,1,3) and triangle(4,5,3) fused into one
// 6-edge, then ground elements relabeled so that (2,1,4,5,3) becomes
// `tuple`, remaining elements in increasing order. Connected, acyclic,
// (n^2 - n - 4)/2 edges. Needs n >= 5.
Hypergraph build_connected(int n, std::array<int, 5> tuple);

// Berge acyclicity: the bipartite incidence graph (pair vertices on one
// side, hyperedges on the other) is a forest.
bool is_acyclic(const Hypergraph& h);
bool is_connected(const Hypergraph& h);
int components_count(const Hypergraph& h);
// Pair vertices grouped by incidence component, groups sorted by their
// smallest vertex.
std::vector<std::vector<PairV>> components(const Hypergraph& h);

// Breadth-first ordering of the edges from the 6-edge (or from the
// smallest edge if there is none), neighbors visited in key order. In an
// acyclic connected hypergraph every edge after the first shares exactly
// one vertex with the union of its predecessors.
std::vector<Hyperedge> order_hyperedges(const Hypergraph& h);

// One line per edge, "a,b ; c,d ; ...", pairs sorted. Connected acyclic
// hypergraphs with a 6-edge are dumped in order_hyperedges order, others
// sorted lexicographically.
std::string dump(const Hypergraph& h);

}  // namespace rankgray
