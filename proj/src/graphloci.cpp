#include "asklab/graphloci.hpp"

#include <algorithm>
#include <set>

namespace asklab {

Graph Graph::make(int n, std::vector<std::pair<int, int>> edges, std::string name) {
    if (n < 0) throw InvalidInputError("negative vertex count");
    std::set<std::pair<int, int>> seen;
    for (auto& [a, b] : edges) {
        if (a == b) throw InvalidInputError("loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n)
            throw InvalidInputError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") out of range");
        if (!seen.insert({a, b}).second)
            throw InvalidInputError("duplicate edge (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
    }
    Graph g;
    g.n = n;
    g.edges.assign(seen.begin(), seen.end());
    g.name = std::move(name);
    return g;
}

bool Graph::adjacent(int i, int j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

ModuleRep graph_rep(const Graph& g) {
    const int n = g.n;
    const int l = n * (n + 1) / 2 - g.edge_count();
    std::vector<Int> tensor(static_cast<std::size_t>(l) * n * n);
    ModuleRep rep(l, n, n, std::move(tensor));
    int k = 0;
    for (int i = 0; i < n; ++i) rep.c(k++, i, i) = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (g.adjacent(i, j)) continue;
            rep.c(k, i, j) = 1;
            rep.c(k, j, i) = 1;
            ++k;
        }
    if (k != l) throw std::logic_error("graph basis count mismatch");
    rep.set_name(g.name.empty() ? "gamma" : "gamma(" + g.name + ")");
    return rep;
}

Int graph_vmax(const Graph& g, PrimePower q, const Budget& budget, unsigned threads) {
    return vmax_count(graph_rep(g), q, budget, threads);
}

LimitCongruence limit_congruence_check(const Graph& g, PrimePower q, int m,
                                       const Budget& budget, unsigned threads) {
    if (m < 1) throw InvalidInputError("congruence level m must be >= 1");
    ModuleRep rep = graph_rep(g);
    RankHistogram h = rank_histogram(rep, q, budget, threads);
    AskValue scaled = ask_from_histogram(h, m);  // already q^l ask(m gamma)

    LimitCongruence out;
    out.m = m;
    out.scaled_ask = scaled.num;
    out.vmax = (rep.d() < static_cast<int>(h.counts.size()))
                   ? Int(static_cast<unsigned long>(h.counts[rep.d()]))
                   : Int(0);
    Int diff = out.scaled_ask - out.vmax;
    if (diff == 0) {
        out.difference_valuation = std::nullopt;
        out.holds = true;
    } else {
        long v = int_valuation(diff, Int(static_cast<unsigned long>(q.q)));
        out.difference_valuation = v;
        out.holds = v >= m;
    }
    return out;
}

}  // namespace asklab
