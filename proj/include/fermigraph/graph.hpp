#pragma once

#include "fermigraph/snippet.hpp"
#include "fermigraph/weights.hpp"

#include <Eigen/SparseCore>
#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace fermigraph {

struct GraphEdge {
    int u; // endpoint indices, u < v
    int v;
    int k;        // 1-based generator (bond) index; carried through products
    double alpha; // edge weight
};

/// Undirected weighted graph with its Laplacian, immutable after construction.
class WeightedGraph {
  public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t n_vertices, std::vector<GraphEdge> edges);

    std::size_t size() const { return n_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    const Eigen::SparseMatrix<double>& laplacian() const { return laplacian_; }
    /// Weighted degree per vertex (the Laplacian diagonal).
    const std::vector<double>& degrees() const { return degrees_; }
    double max_degree() const { return max_degree_; }

  private:
    std::size_t n_ = 0;
    std::vector<GraphEdge> edges_;
    std::vector<double> degrees_;
    double max_degree_ = 0.0;
    Eigen::SparseMatrix<double> laplacian_;
};

/// The weighted Schreier graph of a Young subgroup inside the symmetric group,
/// generated by adjacent transpositions: vertices are snippets, edges are
/// admissible adjacent swaps carrying the exchange constant of their bond.
class WeightedSchreierGraph {
  public:
    WeightedSchreierGraph(SnippetSpace space, WeightSet weights,
                          WeightedGraph core)
        : space_(std::move(space)), weights_(std::move(weights)),
          core_(std::move(core)) {}

    const SnippetSpace& space() const { return space_; }
    const WeightSet& weights() const { return weights_; }
    const WeightedGraph& core() const { return core_; }

    const Partition& mixture() const { return space_.mixture(); }
    std::size_t size() const { return core_.size(); }
    const Eigen::SparseMatrix<double>& laplacian() const { return core_.laplacian(); }

  private:
    SnippetSpace space_;
    WeightSet weights_;
    WeightedGraph core_;
};

WeightedSchreierGraph build_graph(const Partition& nu, const WeightSet& w,
                                  std::uint64_t cap = default_snippet_cap);

struct BipartiteCheck {
    bool bipartite = false;
    std::vector<std::int8_t> coloring; // 0/1 per vertex, BFS 2-coloring
    std::size_t part_sizes[2] = {0, 0};
};
BipartiteCheck is_bipartite(const WeightedGraph& g);

struct DegreeProfile {
    std::vector<double> degrees;
    bool regular = false;
    bool biregular = false; // bipartition classes of constant degree x, y
    double x = 0.0;
    double y = 0.0;
};
DegreeProfile degree_profile(const WeightedGraph& g);

/// Cartesian product; vertex (i, j) of factors (a, b) maps to index i*b.size()+j.
WeightedGraph cartesian_product(const WeightedGraph& a, const WeightedGraph& b);

std::string to_dot(const WeightedSchreierGraph& g);
nlohmann::json to_json(const WeightedSchreierGraph& g);
std::string export_graph(const WeightedSchreierGraph& g, const std::string& format);

struct ImportedGraph {
    int n = 0;
    Partition mixture;
    std::vector<std::string> vertices;
    std::vector<int> signs;
    WeightedGraph graph;
};
ImportedGraph graph_from_json(const nlohmann::json& j);

} // namespace fermigraph
