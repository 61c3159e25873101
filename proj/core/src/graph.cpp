#include "tokenalg/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace tokenalg {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

Graph make_graph(int n, std::vector<Edge> edges) {
    if (n < 1) throw InputError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw InputError("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n)
            throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range 1.." +
                             std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw InputError("duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
    return Graph{n, std::move(edges)};
}

Graph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, int>> located;  // edge with its line, for error reporting
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only line
        if (n < 0) {
            long count;
            char extra;
            if (first != "n" || !(ls >> count) || (ls >> extra) || count < 1)
                throw InputError("line " + std::to_string(lineno) + ": expected 'n <count>'");
            n = static_cast<int>(count);
            continue;
        }
        std::istringstream es(line);
        long u, v;
        char extra;
        if (!(es >> u >> v) || (es >> extra))
            throw InputError("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u == v) throw InputError("line " + std::to_string(lineno) + ": loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n)
            throw InputError("line " + std::to_string(lineno) + ": vertex out of range 1.." + std::to_string(n));
        located.push_back({{static_cast<int>(u), static_cast<int>(v)}, lineno});
    }
    if (n < 0) throw InputError("missing 'n <count>' header line");
    std::sort(located.begin(), located.end());
    for (size_t i = 0; i + 1 < located.size(); ++i)
        if (located[i].first == located[i + 1].first)
            throw InputError("line " + std::to_string(located[i + 1].second) + ": duplicate edge {" +
                             std::to_string(located[i].first.first) + "," + std::to_string(located[i].first.second) +
                             "}");
    edges.reserve(located.size());
    for (auto& [e, ln] : located) edges.push_back(e);
    return Graph{n, std::move(edges)};
}

namespace {

// Bit t of the upper triangle in column-major order: (0,1),(0,2),(1,2),(0,3),...
std::pair<int, int> triangle_pair(int t) {
    int j = 1;
    while (t >= j) t -= j, ++j;
    return {t, j};
}

}  // namespace

Graph graph_from_graph6(const std::string& bytes) {
    std::string s = bytes;
    const std::string header = ">>graph6<<";
    if (s.rfind(header, 0) == 0) s.erase(0, header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw InputError("graph6: empty input");
    int first = static_cast<unsigned char>(s[0]);
    if (first < 63 || first > 125) throw InputError("graph6: bad size byte (only n <= 62 supported)");
    int n = first - 63;
    if (n < 1) throw InputError("graph6: empty graph (n = 0) not supported");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) - 1 != nbytes)
        throw InputError("graph6: body length mismatch (expected " + std::to_string(nbytes) + " bytes, got " +
                         std::to_string(s.size() - 1) + ")");
    std::vector<Edge> edges;
    for (int b = 0; b < nbytes; ++b) {
        int byte = static_cast<unsigned char>(s[1 + b]);
        if (byte < 63 || byte > 126) throw InputError("graph6: invalid body byte at position " + std::to_string(b));
        int bits = byte - 63;
        for (int k = 0; k < 6; ++k) {
            int t = 6 * b + k;
            bool set = (bits >> (5 - k)) & 1;
            if (t >= nbits) {
                if (set) throw InputError("graph6: nonzero trailing padding bits");
                continue;
            }
            if (set) {
                auto [i, j] = triangle_pair(t);
                edges.push_back({i + 1, j + 1});
            }
        }
    }
    return make_graph(n, std::move(edges));
}

std::string graph_to_graph6(const Graph& g) {
    if (g.n > 62) throw InputError("graph6 encoder supports n <= 62 only");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int nbits = g.n * (g.n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    std::vector<int> body(nbytes, 0);
    int t = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (g.has_edge(i + 1, j + 1)) body[t / 6] |= 1 << (5 - t % 6);
    for (int b : body) out.push_back(static_cast<char>(b + 63));
    return out;
}

Graph parse_graph(const std::string& content) {
    if (content.rfind(">>graph6<<", 0) == 0) return graph_from_graph6(content);
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "n") return graph_from_edge_list(content);
        break;
    }
    return graph_from_graph6(content);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph{g.n, std::move(edges)};
}

Graph complete_graph(int n) {
    if (n < 1) throw InputError("complete graph needs at least one vertex");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph{n, std::move(edges)};
}

Graph elementary_graph(int n, Edge e) { return make_graph(n, {e}); }

Matrix adjacency(const Graph& g) {
    Matrix a(g.n, g.n);
    for (auto [u, v] : g.edges) {
        a(u - 1, v - 1) = 1;
        a(v - 1, u - 1) = 1;
    }
    return a;
}

Matrix laplacian(const Graph& g) {
    Matrix l(g.n, g.n);
    for (auto [u, v] : g.edges) {
        l(u - 1, v - 1) = -1;
        l(v - 1, u - 1) = -1;
        l(u - 1, u - 1) += 1;
        l(v - 1, v - 1) += 1;
    }
    return l;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    auto adj = adjacency_lists(g);
    std::vector<int> dist(g.n + 1, -1);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    dist.erase(dist.begin());
    return dist;  // now 0-based: dist[v-1]
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 1);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_bipartite(const Graph& g) {
    auto adj = adjacency_lists(g);
    std::vector<int> color(g.n + 1, -1);
    for (int s = 1; s <= g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj[u]) {
                if (color[w] < 0) {
                    color[w] = 1 - color[u];
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

DistanceMatrices distance_matrices(const Graph& g) {
    int diameter = 0;
    std::vector<std::vector<int>> dist(g.n);
    for (int u = 1; u <= g.n; ++u) {
        dist[u - 1] = bfs_distances(g, u);
        for (int v = 1; v <= g.n; ++v) {
            if (dist[u - 1][v - 1] < 0)
                throw InputError("graph is disconnected: no path from " + std::to_string(u) + " to " +
                                 std::to_string(v));
            diameter = std::max(diameter, dist[u - 1][v - 1]);
        }
    }
    DistanceMatrices dm;
    dm.diameter = diameter;
    dm.mats.assign(diameter + 1, Matrix(g.n, g.n));
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) dm.mats[dist[u][v]](u, v) = 1;
    return dm;
}

}  // namespace tokenalg
