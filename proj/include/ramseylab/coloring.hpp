#pragma once

#include <ramseylab/graph.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ramseylab {

enum class Colour : std::uint8_t
{
    red,
    blue,
};

inline constexpr Colour other(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }

/// Either K_N, or K_M plus a pendant vertex M adjacent to vertices 0..k-1.
class HostGraph
{
public:
    enum class Kind
    {
        complete,
        star_book,
    };

    static HostGraph complete(int order);
    static HostGraph star_book(int clique_order, int pendant_degree);

    Kind kind() const { return kind_; }
    int order() const { return graph_.order(); }
    int clique_order() const { return clique_order_; }
    int pendant_degree() const { return pendant_degree_; }
    /// Vertex M of a star book; -1 for complete hosts.
    int pendant_vertex() const { return kind_ == Kind::star_book ? clique_order_ : -1; }

    const Graph & graph() const { return graph_; }

    /// Normative edge order: (i, j), i < j lexicographic within the clique,
    /// then pendant edges (j, M) for j = 0..k-1.
    const std::vector<Edge> & edges() const { return edges_; }

    bool has_edge(int u, int v) const { return graph_.adjacent(u, v); }

    /// "K8" or "K8+S5".
    std::string describe() const;

    bool operator==(const HostGraph & other) const
    {
        return kind_ == other.kind_ && clique_order_ == other.clique_order_ &&
               pendant_degree_ == other.pendant_degree_;
    }

private:
    HostGraph(Kind kind, int clique_order, int pendant_degree);

    Kind kind_ = Kind::complete;
    int clique_order_ = 0;
    int pendant_degree_ = 0;
    Graph graph_;
    std::vector<Edge> edges_;
};

/// Total red/blue assignment on the edges of a host graph.
class TwoColoring
{
public:
    explicit TwoColoring(HostGraph host, Colour fill = Colour::red);

    const HostGraph & host() const { return host_; }

    /// Colour of uv, or nothing if uv is not a host edge.
    std::optional<Colour> colour(int u, int v) const;
    void set(int u, int v, Colour c);

    std::span<const VertexSet> rows(Colour c) const { return c == Colour::red ? red_ : blue_; }
    Graph graph(Colour c) const;
    Graph red() const { return graph(Colour::red); }
    Graph blue() const { return graph(Colour::blue); }

    /// One 'R'/'B' per host edge in the normative order.
    std::string colour_string() const;
    static TwoColoring from_string(HostGraph host, std::string_view colours);

    /// The colouring of the K_M part of a star-book host (identity for complete hosts).
    TwoColoring restricted_to_clique() const;

    /// Colouring of K_N whose red graph is `red` and whose other edges are blue.
    static TwoColoring from_red_graph(const Graph & red);

    bool operator==(const TwoColoring & other) const
    {
        return host_ == other.host_ && red_ == other.red_ && blue_ == other.blue_;
    }

private:
    HostGraph host_;
    std::vector<VertexSet> red_;
    std::vector<VertexSet> blue_;
};

nlohmann::json host_to_json(const HostGraph & host);
HostGraph host_from_json(const nlohmann::json & j);

nlohmann::json to_json(const TwoColoring & c);
TwoColoring coloring_from_json(const nlohmann::json & j);

}
