#include "tfnf/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace tfnf::oracle {

namespace {

Partition partition_from_union_find(UnionFind& uf, Index n) {
    std::vector<Index> labels(static_cast<std::size_t>(n));
    for (Index v = 1; v <= n; ++v) {
        labels[static_cast<std::size_t>(v - 1)] = uf.find(v);
    }
    return partition_from_labels(labels);
}

Index residue(Index v, Index d) {
    return (v - 1) % d + 1;
}

} // namespace

UnionFind::UnionFind(Index n)
    : parent_(static_cast<std::size_t>(n) + 1), size_(static_cast<std::size_t>(n) + 1, 1),
      components_(n) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
}

Index UnionFind::find(Index v) {
    Index root = v;
    while (parent_[static_cast<std::size_t>(root)] != root) {
        root = parent_[static_cast<std::size_t>(root)];
    }
    while (parent_[static_cast<std::size_t>(v)] != root) {
        Index next = parent_[static_cast<std::size_t>(v)];
        parent_[static_cast<std::size_t>(v)] = root;
        v = next;
    }
    return root;
}

bool UnionFind::unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return false;
    }
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) {
        std::swap(a, b);
    }
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    --components_;
    return true;
}

void for_each_edge(const OffsetSet& offsets, const std::function<void(Index, Index)>& visit) {
    const Index n = offsets.order();
    for (Index s : offsets.offsets()) {
        for (Index v = 1; v + s <= n; ++v) {
            visit(v, v + s);
        }
    }
}

ExplicitGraph build_graph(const OffsetSet& offsets) {
    ExplicitGraph graph{offsets.order(), {}};
    for_each_edge(offsets, [&graph](Index u, Index v) { graph.edges.push_back({u, v}); });
    return graph;
}

ExplicitGraph make_graph(Index n, std::vector<Edge> edges) {
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u < 1 || e.v < 1 || e.u > n || e.v > n) {
            throw ContractError("make_graph: edge endpoint outside 1.." + std::to_string(n));
        }
        if (e.u == e.v) {
            continue;
        }
        normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    return {n, std::move(normalized)};
}

Partition components_oracle(const ExplicitGraph& graph) {
    UnionFind uf(graph.n);
    for (const Edge& e : graph.edges) {
        uf.unite(e.u, e.v);
    }
    return partition_from_union_find(uf, graph.n);
}

Partition components_bfs(const ExplicitGraph& graph) {
    const auto n = static_cast<std::size_t>(graph.n);
    std::vector<std::vector<Index>> adjacency(n + 1);
    for (const Edge& e : graph.edges) {
        adjacency[static_cast<std::size_t>(e.u)].push_back(e.v);
        adjacency[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<Index> label(n, 0);
    Index next = 0;
    for (Index start = 1; start <= graph.n; ++start) {
        if (label[static_cast<std::size_t>(start - 1)] != 0) {
            continue;
        }
        ++next;
        std::queue<Index> frontier;
        frontier.push(start);
        label[static_cast<std::size_t>(start - 1)] = next;
        while (!frontier.empty()) {
            const Index u = frontier.front();
            frontier.pop();
            for (Index w : adjacency[static_cast<std::size_t>(u)]) {
                if (label[static_cast<std::size_t>(w - 1)] == 0) {
                    label[static_cast<std::size_t>(w - 1)] = next;
                    frontier.push(w);
                }
            }
        }
    }
    return partition_from_labels(label);
}

Partition toeplitz_components(const OffsetSet& offsets) {
    UnionFind uf(offsets.order());
    for_each_edge(offsets, [&uf](Index u, Index v) { uf.unite(u, v); });
    return partition_from_union_find(uf, offsets.order());
}

Partition partition_from_labels(std::span<const Index> labels) {
    // Labels may be arbitrary integers; map them to classes in order of
    // first appearance, which is order of smallest member.
    std::vector<std::pair<Index, Index>> keyed(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        keyed[i] = {labels[i], static_cast<Index>(i + 1)};
    }
    std::sort(keyed.begin(), keyed.end());
    Partition classes;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) {
            classes.emplace_back();
        }
        classes.back().push_back(keyed[i].second);
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

bool is_connected(const ExplicitGraph& graph) {
    UnionFind uf(graph.n);
    for (const Edge& e : graph.edges) {
        uf.unite(e.u, e.v);
    }
    return uf.components() == 1;
}

bool is_d_reachable(const ExplicitGraph& graph, Index d) {
    if (d < 1 || d >= graph.n) {
        throw ContractError("is_d_reachable: requires 1 <= d < n (d = " + std::to_string(d) +
                            ", n = " + std::to_string(graph.n) + ")");
    }
    UnionFind uf(graph.n);
    for (const Edge& e : graph.edges) {
        uf.unite(e.u, e.v);
    }
    for (Index v = 1; v + d <= graph.n; ++v) {
        if (uf.find(v) != uf.find(v + d)) {
            return false;
        }
    }
    return true;
}

QuotientGraph contract(const ExplicitGraph& graph, Index d) {
    if (d < 1 || d > graph.n) {
        throw ContractError("contract: requires 1 <= d <= n");
    }
    QuotientGraph quotient{d, {}};
    for (const Edge& e : graph.edges) {
        Index i = residue(e.u, d);
        Index j = residue(e.v, d);
        if (i == j) {
            continue;
        }
        quotient.edges.emplace_back(std::min(i, j), std::max(i, j));
    }
    std::sort(quotient.edges.begin(), quotient.edges.end());
    quotient.edges.erase(std::unique(quotient.edges.begin(), quotient.edges.end()),
                         quotient.edges.end());
    return quotient;
}

bool cycle_structure_check(Index n, Index s) {
    if (s <= 0 || s >= n || s == n - s) {
        throw ContractError("cycle_structure_check: requires 0 < s < n and s != n - s");
    }
    const ExplicitGraph graph = build_graph(OffsetSet(n, {std::min(s, n - s), std::max(s, n - s)}));
    const Index d = std::gcd(n, s);

    Partition expected;
    for (Index i = 1; i <= d; ++i) {
        std::vector<Index> cls;
        for (Index v = i; v <= n; v += d) {
            cls.push_back(v);
        }
        expected.push_back(std::move(cls));
    }
    if (components_oracle(graph) != expected) {
        return false;
    }

    // Connected classes where every vertex has degree 2 and edges equal
    // vertices are exactly cycles.
    std::vector<Index> degree(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Index> edges_in_class(static_cast<std::size_t>(d) + 1, 0);
    for (const Edge& e : graph.edges) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
        ++edges_in_class[static_cast<std::size_t>(residue(e.u, d))];
    }
    for (Index v = 1; v <= n; ++v) {
        if (degree[static_cast<std::size_t>(v)] != 2) {
            return false;
        }
    }
    for (Index i = 1; i <= d; ++i) {
        if (edges_in_class[static_cast<std::size_t>(i)] != n / d) {
            return false;
        }
    }
    return true;
}

bool alpha_isomorphism_check(const OffsetSet& original, const OffsetSet& reduced, Index removed) {
    const Index n = original.order();
    if (original.empty()) {
        return false;
    }
    const Index s0 = original.min();
    if (removed != 2 * s0 - n || removed < 1 || reduced.order() != n - removed) {
        return false;
    }

    const ExplicitGraph big = build_graph(original);
    std::vector<Edge> mapped;
    mapped.reserve(big.edges.size());
    auto relabel = [&](Index w) -> Index {
        if (w <= n - s0) {
            return w;
        }
        if (w >= 1 + s0) {
            return w - removed;
        }
        return 0;
    };
    for (const Edge& e : big.edges) {
        const Index u = relabel(e.u);
        const Index v = relabel(e.v);
        if (u == 0 || v == 0) {
            return false; // an edge touches a vertex that should be isolated
        }
        mapped.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(mapped.begin(), mapped.end());

    ExplicitGraph small = build_graph(reduced);
    std::sort(small.edges.begin(), small.edges.end());
    return mapped == small.edges;
}

bool is_permutation_of_order(std::span<const Index> permutation, Index n) {
    if (static_cast<Index>(permutation.size()) != n) {
        return false;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Index v : permutation) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

} // namespace tfnf::oracle
