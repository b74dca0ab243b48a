#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asklab/modrep.hpp"

namespace asklab {

// Finite simple graph on vertices 0..n-1.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized i < j, sorted
    std::string name;

    // Validates: endpoints in range, no loops, no duplicates.
    static Graph make(int n, std::vector<std::pair<int, int>> edges, std::string name = "");

    bool adjacent(int i, int j) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
};

// The space of symmetric n x n integer matrices vanishing on adjacent pairs,
// as a module representation into Mat_n. Basis order: E_ii by vertex, then
// E_ij + E_ji over non-adjacent i < j lexicographically, so the module rank
// is n(n+1)/2 - |edges|. Always immersive.
ModuleRep graph_rep(const Graph& g);

// Number of full-rank matrices in the graph's matrix space over F_q.
Int graph_vmax(const Graph& g, PrimePower q, const Budget& budget = {},
               unsigned threads = 1);

struct LimitCongruence {
    Int scaled_ask;  // q^l ask(m-th power of gamma), an integer
    Int vmax;        // number of full-rank points
    int m = 0;
    bool holds = false;                        // scaled_ask = vmax mod q^m
    std::optional<long> difference_valuation;  // none when the two sides agree
};

// Checks the q-adic approximation of the full-rank count by m-th power ask
// values: q^l ask(m gamma) = vmax mod q^m, exactly.
LimitCongruence limit_congruence_check(const Graph& g, PrimePower q, int m,
                                       const Budget& budget = {}, unsigned threads = 1);

}  // namespace asklab
