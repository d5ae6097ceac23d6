#include <ramseylab/canon.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace ramseylab {

namespace {

using Cells = std::vector<VertexSet>;

/// Refines to the coarsest equitable partition finer than `cells`, splitting
/// cells by neighbour counts into each splitter cell. Sub-cells are ordered by
/// increasing count, so the result commutes with relabelling.
void refine(std::span<const VertexSet> rows, Cells & cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            VertexSet splitter = cells[s];
            Cells next;
            next.reserve(cells.size() + 4);
            for (VertexSet cell : cells) {
                if (set_size(cell) == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::array<VertexSet, 65> by_count{};
                int lo = 64;
                int hi = 0;
                for_each_vertex(cell, [&](int v) {
                    int c = set_size(rows[v] & splitter);
                    by_count[c] |= singleton(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                });
                if (lo == hi) {
                    next.push_back(cell);
                    continue;
                }
                changed = true;
                for (int c = lo; c <= hi; ++c)
                    if (by_count[c])
                        next.push_back(by_count[c]);
            }
            cells = std::move(next);
        }
    }
}

struct UnionFind
{
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a < b)
            parent[b] = a;
        else if (b < a)
            parent[a] = b;
    }
};

class Canoniser
{
public:
    Canoniser(const Graph & g) : g_(g), n_(g.order()) {}

    CanonicalForm run(std::span<const int> colours)
    {
        Cells cells;
        if (colours.empty()) {
            if (n_ > 0)
                cells.push_back(g_.vertices());
        }
        else {
            std::map<int, VertexSet> by_colour;
            for (int v = 0; v < n_; ++v)
                by_colour[colours[v]] |= singleton(v);
            for (auto & [c, s] : by_colour)
                cells.push_back(s);
        }
        refine(g_.rows(), cells);
        std::vector<int> prefix;
        search(cells, prefix);

        CanonicalForm out;
        out.label.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            out.label[best_perm_[i]] = i;
        out.graph = Graph(n_);
        for (int i = 0; i < n_; ++i)
            for_each_vertex(best_key_[i] & ~first_n(i + 1), [&](int j) { out.graph.add_edge(i, j); });
        UnionFind uf(n_);
        for (auto & gen : generators_)
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gen[v]);
        out.orbit.resize(n_);
        for (int v = 0; v < n_; ++v)
            out.orbit[v] = uf.find(v);
        out.generators = std::move(generators_);
        out.leaves = leaves_;
        return out;
    }

private:
    std::vector<VertexSet> key_of(const std::vector<int> & perm) const
    {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i)
            pos[perm[i]] = i;
        std::vector<VertexSet> key(n_, 0);
        for (int i = 0; i < n_; ++i)
            for_each_vertex(g_.neighbours(perm[i]), [&](int u) { key[i] |= singleton(pos[u]); });
        return key;
    }

    void leaf(const Cells & cells)
    {
        ++leaves_;
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i)
            perm[i] = lowest(cells[i]);
        auto key = key_of(perm);
        if (first_perm_.empty()) {
            first_perm_ = perm;
            first_key_ = key;
            best_perm_ = perm;
            best_key_ = key;
            return;
        }
        if (key == first_key_) {
            record_automorphism(first_perm_, perm);
            return;
        }
        if (key == best_key_) {
            record_automorphism(best_perm_, perm);
            return;
        }
        if (key < best_key_) {
            best_key_ = std::move(key);
            best_perm_ = std::move(perm);
        }
    }

    void record_automorphism(const std::vector<int> & from, const std::vector<int> & to)
    {
        std::vector<int> gen(n_);
        for (int i = 0; i < n_; ++i)
            gen[from[i]] = to[i];
        generators_.push_back(std::move(gen));
    }

    /// True if some generator-group element fixing `prefix` pointwise maps an
    /// already explored vertex onto w.
    bool equivalent_to_explored(const std::vector<int> & prefix, VertexSet explored, int w) const
    {
        if (!explored || generators_.empty())
            return false;
        UnionFind uf(n_);
        bool any = false;
        for (auto & gen : generators_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gen[p] == p; });
            if (!fixes)
                continue;
            any = true;
            for (int v = 0; v < n_; ++v)
                uf.unite(v, gen[v]);
        }
        if (!any)
            return false;
        int root = uf.find(w);
        bool hit = false;
        for_each_vertex(explored, [&](int v) { hit = hit || uf.find(v) == root; });
        return hit;
    }

    void search(const Cells & cells, std::vector<int> & prefix)
    {
        auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return set_size(c) > 1; });
        if (target == cells.end()) {
            leaf(cells);
            return;
        }
        std::size_t at = static_cast<std::size_t>(target - cells.begin());
        VertexSet explored = 0;
        for_each_vertex(cells[at], [&](int w) {
            if (equivalent_to_explored(prefix, explored, w))
                return;
            Cells child;
            child.reserve(cells.size() + 1);
            child.insert(child.end(), cells.begin(), cells.begin() + at);
            child.push_back(singleton(w));
            child.push_back(cells[at] & ~singleton(w));
            child.insert(child.end(), cells.begin() + at + 1, cells.end());
            refine(g_.rows(), child);
            prefix.push_back(w);
            search(child, prefix);
            prefix.pop_back();
            explored |= singleton(w);
        });
    }

    const Graph & g_;
    int n_;
    std::vector<int> first_perm_, best_perm_;
    std::vector<VertexSet> first_key_, best_key_;
    std::vector<std::vector<int>> generators_;
    std::uint64_t leaves_ = 0;
};

}

CanonicalForm canonical_form(const Graph & g, std::span<const int> colours)
{
    if (!colours.empty() && static_cast<int>(colours.size()) != g.order())
        throw GraphError("colour vector length does not match graph order");
    return Canoniser(g).run(colours);
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a).graph == canonical_form(b).graph;
}

std::vector<std::size_t> arc_orbit_representatives(std::span<const Edge> arcs,
                                                   std::span<const std::vector<int>> generators)
{
    std::map<Edge, std::size_t> index;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        index.emplace(arcs[i], i);
    UnionFind uf(static_cast<int>(arcs.size()));
    for (auto & gen : generators)
        for (std::size_t i = 0; i < arcs.size(); ++i) {
            auto it = index.find({gen[arcs[i].first], gen[arcs[i].second]});
            if (it != index.end())
                uf.unite(static_cast<int>(i), static_cast<int>(it->second));
        }
    std::vector<std::size_t> rep(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i)
        rep[i] = static_cast<std::size_t>(uf.find(static_cast<int>(i)));
    return rep;
}

}
