#include "fermigraph/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fermigraph {

using nlohmann::json;

WeightedGraph::WeightedGraph(std::size_t n_vertices, std::vector<GraphEdge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    degrees_.assign(n_, 0.0);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(edges_.size() * 4 + n_);
    for (const auto& e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= static_cast<int>(n_) ||
            e.v >= static_cast<int>(n_) || e.u == e.v)
            throw std::invalid_argument("WeightedGraph: bad edge endpoints");
        if (!(e.alpha > 0.0))
            throw std::invalid_argument("WeightedGraph: edge weights must be positive");
        trip.emplace_back(e.u, e.v, -e.alpha);
        trip.emplace_back(e.v, e.u, -e.alpha);
        trip.emplace_back(e.u, e.u, e.alpha);
        trip.emplace_back(e.v, e.v, e.alpha);
        degrees_[static_cast<size_t>(e.u)] += e.alpha;
        degrees_[static_cast<size_t>(e.v)] += e.alpha;
    }
    // keep the zero diagonal explicit so isolated vertices appear in the matrix
    for (std::size_t i = 0; i < n_; ++i)
        trip.emplace_back(static_cast<int>(i), static_cast<int>(i), 0.0);
    laplacian_.resize(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    laplacian_.setFromTriplets(trip.begin(), trip.end());
    laplacian_.makeCompressed();
    max_degree_ = degrees_.empty()
                      ? 0.0
                      : *std::max_element(degrees_.begin(), degrees_.end());
}

WeightedSchreierGraph build_graph(const Partition& nu, const WeightSet& w,
                                  std::uint64_t cap) {
    if (w.n() != nu.n())
        throw std::invalid_argument("build_graph: weights are for n=" +
                                    std::to_string(w.n()) + ", mixture has n=" +
                                    std::to_string(nu.n()));
    SnippetSpace space = enumerate_snippets(nu, cap);
    int n = nu.n();
    std::vector<GraphEdge> edges;
    std::set<std::pair<int, int>> seen;
    for (std::size_t u = 0; u < space.size(); ++u) {
        Snippet s{space.word(u)};
        for (int k = 1; k <= n - 1; ++k) {
            auto t = adjacent_swap(s, k);
            if (!t)
                continue;
            std::size_t v = space.index_of(t->word);
            if (v <= u)
                continue; // counted from the other endpoint
            if (!seen.emplace(static_cast<int>(u), static_cast<int>(v)).second)
                throw std::logic_error("build_graph: multi-edge between snippets " +
                                       space.word_string(u) + " and " +
                                       space.word_string(v));
            edges.push_back({static_cast<int>(u), static_cast<int>(v), k, w.alpha(k)});
        }
    }
    WeightedGraph core(space.size(), std::move(edges));
    return WeightedSchreierGraph(std::move(space), w, std::move(core));
}

BipartiteCheck is_bipartite(const WeightedGraph& g) {
    std::vector<std::vector<int>> adj(g.size());
    for (const auto& e : g.edges()) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    BipartiteCheck out;
    out.coloring.assign(g.size(), -1);
    out.bipartite = true;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (out.coloring[start] != -1)
            continue;
        out.coloring[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (int vi : adj[u]) {
                std::size_t v = static_cast<size_t>(vi);
                if (out.coloring[v] == -1) {
                    out.coloring[v] = static_cast<std::int8_t>(1 - out.coloring[u]);
                    queue.push_back(v);
                } else if (out.coloring[v] == out.coloring[u]) {
                    out.bipartite = false;
                }
            }
        }
    }
    if (out.bipartite)
        for (auto c : out.coloring)
            out.part_sizes[static_cast<size_t>(c)]++;
    return out;
}

DegreeProfile degree_profile(const WeightedGraph& g) {
    DegreeProfile p;
    p.degrees = g.degrees();
    if (p.degrees.empty())
        return p;
    double scale = std::max(1.0, g.max_degree());
    double tol = 1e-12 * scale;
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.regular = (*hi - *lo) <= tol;
    BipartiteCheck bc = is_bipartite(g);
    if (!bc.bipartite)
        return p; // biregularity is a property of a bipartition
    if (p.regular) {
        p.x = p.y = p.degrees.front();
        p.biregular = true;
        return p;
    }
    double cls[2] = {-1.0, -1.0};
    bool ok = true;
    for (std::size_t i = 0; i < g.size() && ok; ++i) {
        double& c = cls[static_cast<size_t>(bc.coloring[i])];
        if (c < 0.0)
            c = p.degrees[i];
        else if (std::abs(c - p.degrees[i]) > tol)
            ok = false;
    }
    p.biregular = ok;
    if (ok) {
        p.x = cls[0];
        p.y = cls[1];
    }
    return p;
}

WeightedGraph cartesian_product(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.size() == 0 || b.size() == 0)
        throw std::invalid_argument("cartesian_product: empty factor");
    if (a.size() > (static_cast<std::size_t>(1) << 31) / b.size())
        throw std::overflow_error("cartesian_product: size overflow");
    std::size_t nb = b.size();
    std::vector<GraphEdge> edges;
    edges.reserve(a.edges().size() * nb + b.edges().size() * a.size());
    for (const auto& e : a.edges())
        for (std::size_t j = 0; j < nb; ++j)
            edges.push_back({static_cast<int>(e.u * nb + j),
                             static_cast<int>(e.v * nb + j), e.k, e.alpha});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& e : b.edges())
            edges.push_back({static_cast<int>(i * nb + e.u),
                             static_cast<int>(i * nb + e.v), e.k, e.alpha});
    return WeightedGraph(a.size() * nb, std::move(edges));
}

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

std::string to_dot(const WeightedSchreierGraph& g) {
    std::ostringstream os;
    os << "graph schreier {\n";
    os << "  // mixture " << g.mixture().to_string() << ", " << g.size()
       << " snippets\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        os << "  v" << i << " [label=\"" << g.space().word_string(i) << "\"];\n";
    for (const auto& e : g.core().edges())
        os << "  v" << e.u << " -- v" << e.v << " [label=\"α" << e.k
           << "\", weight=" << fmt17(e.alpha) << "];\n";
    os << "}\n";
    return os.str();
}

json to_json(const WeightedSchreierGraph& g) {
    json j;
    j["n"] = g.mixture().n();
    j["mixture"] = g.mixture().parts();
    std::vector<std::string> vertices;
    std::vector<int> signs;
    vertices.reserve(g.size());
    signs.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        vertices.push_back(g.space().word_string(i));
        signs.push_back(g.space().sign(i));
    }
    j["vertices"] = vertices;
    j["signs"] = signs;
    json edges = json::array();
    for (const auto& e : g.core().edges())
        edges.push_back({{"u", e.u}, {"v", e.v}, {"k", e.k}, {"alpha", e.alpha}});
    j["edges"] = edges;
    return j;
}

std::string export_graph(const WeightedSchreierGraph& g, const std::string& format) {
    if (format == "dot")
        return to_dot(g);
    if (format == "json")
        return to_json(g).dump(2) + "\n";
    throw std::invalid_argument("export_graph: unknown format \"" + format + "\"");
}

ImportedGraph graph_from_json(const json& j) {
    ImportedGraph out;
    out.n = j.at("n").get<int>();
    out.mixture = Partition(j.at("mixture").get<std::vector<int>>());
    out.vertices = j.at("vertices").get<std::vector<std::string>>();
    out.signs = j.at("signs").get<std::vector<int>>();
    std::vector<GraphEdge> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at("u").get<int>(), e.at("v").get<int>(),
                         e.at("k").get<int>(), e.at("alpha").get<double>()});
    out.graph = WeightedGraph(out.vertices.size(), std::move(edges));
    return out;
}

} // namespace fermigraph
