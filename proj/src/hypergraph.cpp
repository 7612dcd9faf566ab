#include "chelly/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "chelly/errors.hpp"
#include "chelly/lp.hpp"

namespace chelly {

namespace {

class Bits
{
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    std::size_t size() const { return n_; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }
    bool intersects(const Bits& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    bool subset_of(const Bits& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }
    std::size_t count_and(const Bits& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }
    Bits minus(const Bits& o) const
    {
        Bits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] &= ~o.words_[i];
        return r;
    }
    Bits& operator|=(const Bits& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }
    bool operator==(const Bits&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct UnionFind
{
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

std::vector<std::vector<std::size_t>> normalized_edges(const Hypergraph& h)
{
    h.validate();
    std::vector<std::vector<std::size_t>> out;
    out.reserve(h.edges.size());
    for (auto e : h.edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        out.push_back(std::move(e));
    }
    return out;
}

/// Vertices and edges of one connected piece, in original vertex indices.
struct Piece
{
    std::vector<std::size_t> vertices;
    std::vector<std::vector<std::size_t>> edges;
};

/**
 * Drops superset edges and dominated vertices until stable, then splits
 * into connected components. Minimum hitting sets are preserved.
 */
std::vector<Piece> reduce_for_transversal(const Hypergraph& h)
{
    auto edges = normalized_edges(h);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<bool> alive_vertex(h.vertex_count, true);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Bits> sets;
        for (const auto& e : edges) {
            Bits b(h.vertex_count);
            for (auto v : e)
                if (alive_vertex[v])
                    b.set(v);
            sets.push_back(std::move(b));
        }
        std::vector<bool> keep(edges.size(), true);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = 0; j < sets.size() && keep[i]; ++j)
                if (i != j && keep[j] && sets[j].subset_of(sets[i]) && (!(sets[j] == sets[i]) || j < i))
                    keep[i] = false;
        std::vector<std::vector<std::size_t>> next;
        std::vector<Bits> next_sets;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (keep[i]) {
                std::vector<std::size_t> e;
                sets[i].for_each([&](std::size_t v) { e.push_back(v); });
                next.push_back(std::move(e));
                next_sets.push_back(sets[i]);
            } else {
                changed = true;
            }
        edges = std::move(next);

        std::vector<Bits> incidence(h.vertex_count, Bits(edges.size()));
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (auto v : edges[i])
                incidence[v].set(i);
        for (std::size_t v = 0; v < h.vertex_count; ++v) {
            if (!alive_vertex[v])
                continue;
            if (incidence[v].none()) {
                alive_vertex[v] = false;
                changed = true;
                continue;
            }
            for (std::size_t u = 0; u < h.vertex_count; ++u) {
                if (u == v || !alive_vertex[u])
                    continue;
                if (incidence[v].subset_of(incidence[u]) &&
                    (!(incidence[v] == incidence[u]) || u < v)) {
                    alive_vertex[v] = false;
                    changed = true;
                    break;
                }
            }
        }
    }

    UnionFind uf(h.vertex_count);
    for (const auto& e : edges)
        for (auto v : e)
            uf.unite(e.front(), v);
    std::vector<std::size_t> piece_of(h.vertex_count, SIZE_MAX);
    std::vector<Piece> pieces;
    for (const auto& e : edges) {
        auto root = uf.find(e.front());
        if (piece_of[root] == SIZE_MAX) {
            piece_of[root] = pieces.size();
            pieces.emplace_back();
        }
        pieces[piece_of[root]].edges.push_back(e);
    }
    for (auto& p : pieces) {
        for (const auto& e : p.edges)
            p.vertices.insert(p.vertices.end(), e.begin(), e.end());
        std::sort(p.vertices.begin(), p.vertices.end());
        p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
    }
    return pieces;
}

Hypergraph relabel(const Piece& piece)
{
    Hypergraph g;
    g.vertex_count = piece.vertices.size();
    for (const auto& e : piece.edges) {
        std::vector<std::size_t> local;
        for (auto v : e)
            local.push_back(static_cast<std::size_t>(
                std::lower_bound(piece.vertices.begin(), piece.vertices.end(), v) -
                piece.vertices.begin()));
        g.edges.push_back(std::move(local));
    }
    return g;
}

class HittingSetSearch
{
public:
    HittingSetSearch(const Hypergraph& g, std::size_t lower_bound, std::vector<std::size_t> initial)
        : n_(g.vertex_count), m_(g.edges.size()), lower_bound_(lower_bound), best_(std::move(initial))
    {
        edge_vertices_.assign(m_, Bits(n_));
        vertex_edges_.assign(n_, Bits(m_));
        for (std::size_t i = 0; i < m_; ++i)
            for (auto v : g.edges[i]) {
                edge_vertices_[i].set(v);
                vertex_edges_[v].set(i);
            }
    }

    void run()
    {
        Bits uncovered(m_);
        for (std::size_t i = 0; i < m_; ++i)
            uncovered.set(i);
        std::vector<std::size_t> chosen;
        if (best_.size() > lower_bound_)
            search(uncovered, Bits(n_), chosen);
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::size_t nodes() const { return nodes_; }

private:
    bool done() const { return best_.size() <= lower_bound_; }

    /// Greedy packing of uncovered edges with pairwise disjoint available vertices.
    std::size_t packing_bound(const Bits& uncovered, const Bits& excluded) const
    {
        std::vector<std::pair<std::size_t, std::size_t>> order;
        uncovered.for_each([&](std::size_t e) {
            order.emplace_back(edge_vertices_[e].minus(excluded).count(), e);
        });
        std::sort(order.begin(), order.end());
        Bits used(n_);
        std::size_t count = 0;
        for (auto [size, e] : order) {
            Bits avail = edge_vertices_[e].minus(excluded);
            if (!avail.intersects(used)) {
                used |= avail;
                ++count;
            }
        }
        return count;
    }

    void search(const Bits& uncovered, Bits excluded, std::vector<std::size_t>& chosen)
    {
        ++nodes_;
        if (uncovered.none()) {
            if (chosen.size() < best_.size())
                best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size())
            return;

        std::size_t pick = SIZE_MAX, pick_size = SIZE_MAX;
        bool dead = false;
        uncovered.for_each([&](std::size_t e) {
            std::size_t s = edge_vertices_[e].minus(excluded).count();
            if (s == 0)
                dead = true;
            if (s < pick_size) {
                pick_size = s;
                pick = e;
            }
        });
        if (dead)
            return;
        if (chosen.size() + packing_bound(uncovered, excluded) >= best_.size())
            return;

        std::vector<std::pair<std::size_t, std::size_t>> branch;
        edge_vertices_[pick].minus(excluded).for_each([&](std::size_t v) {
            branch.emplace_back(vertex_edges_[v].count_and(uncovered), v);
        });
        std::sort(branch.begin(), branch.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        for (auto [gain, v] : branch) {
            chosen.push_back(v);
            search(uncovered.minus(vertex_edges_[v]), excluded, chosen);
            chosen.pop_back();
            if (done())
                return;
            excluded.set(v);
        }
    }

    std::size_t n_, m_;
    std::size_t lower_bound_;
    std::vector<std::size_t> best_;
    std::vector<Bits> edge_vertices_;
    std::vector<Bits> vertex_edges_;
    std::size_t nodes_ = 0;
};

std::vector<std::size_t> greedy_cover(const Hypergraph& g)
{
    auto edges = normalized_edges(g);
    std::vector<bool> covered(edges.size(), false);
    std::size_t left = edges.size();
    std::vector<std::size_t> chosen;
    while (left > 0) {
        std::vector<std::size_t> gain(g.vertex_count, 0);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!covered[i])
                for (auto v : edges[i])
                    ++gain[v];
        auto best = static_cast<std::size_t>(std::max_element(gain.begin(), gain.end()) - gain.begin());
        chosen.push_back(best);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (!covered[i] && std::binary_search(edges[i].begin(), edges[i].end(), best)) {
                covered[i] = true;
                --left;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

void require_edges(const Hypergraph& h)
{
    h.validate();
    if (h.edges.empty())
        throw InputError("hypergraph has no edges");
}

std::vector<std::size_t> edge_components(const std::vector<std::vector<std::size_t>>& edges,
                                         std::size_t vertex_count, std::size_t& count)
{
    UnionFind uf(vertex_count);
    for (const auto& e : edges)
        for (auto v : e)
            uf.unite(e.front(), v);
    std::vector<std::size_t> label(vertex_count, SIZE_MAX), comp(edges.size());
    count = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto root = uf.find(edges[i].front());
        if (label[root] == SIZE_MAX)
            label[root] = count++;
        comp[i] = label[root];
    }
    return comp;
}

class BMatchingSearch
{
public:
    BMatchingSearch(std::vector<std::vector<std::size_t>> edges, std::vector<std::size_t> ids,
                    std::size_t vertex_count, std::size_t b, std::size_t upper)
        : edges_(std::move(edges)), ids_(std::move(ids)), load_(vertex_count, 0), b_(b), upper_(upper)
    {
    }

    void run()
    {
        std::vector<std::size_t> chosen;
        search(0, chosen);
    }

    const std::vector<std::size_t>& best() const { return best_; }

private:
    bool fits(std::size_t i) const
    {
        return std::all_of(edges_[i].begin(), edges_[i].end(), [&](auto v) { return load_[v] < b_; });
    }

    void search(std::size_t i, std::vector<std::size_t>& chosen)
    {
        if (chosen.size() > best_.size())
            best_ = chosen;
        if (best_.size() >= upper_ || i == edges_.size())
            return;
        if (chosen.size() + (edges_.size() - i) <= best_.size())
            return;
        if (fits(i)) {
            for (auto v : edges_[i])
                ++load_[v];
            chosen.push_back(ids_[i]);
            search(i + 1, chosen);
            chosen.pop_back();
            for (auto v : edges_[i])
                --load_[v];
        }
        search(i + 1, chosen);
    }

    std::vector<std::vector<std::size_t>> edges_;
    std::vector<std::size_t> ids_;
    std::vector<std::size_t> load_;
    std::size_t b_;
    std::size_t upper_;
    std::vector<std::size_t> best_;
};

} // namespace

void Hypergraph::validate() const
{
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].empty())
            throw InputError("edge " + std::to_string(i) + " is empty");
        for (auto v : edges[i])
            if (v >= vertex_count)
                throw InputError("edge " + std::to_string(i) + " names vertex " + std::to_string(v) +
                                 " outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (!payload.empty() && payload.size() != vertex_count)
        throw InputError("vertex payload does not match vertex_count");
}

bool is_transversal(const Hypergraph& h, const std::vector<std::size_t>& vertices)
{
    for (const auto& e : h.edges)
        if (std::none_of(e.begin(), e.end(), [&](auto v) {
                return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
            }))
            return false;
    return true;
}

bool is_b_matching(const Hypergraph& h, const std::vector<std::size_t>& edges, std::size_t b)
{
    std::vector<std::size_t> load(h.vertex_count, 0);
    std::vector<std::size_t> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (auto i : edges) {
        if (i >= h.edges.size())
            return false;
        auto e = h.edges[i];
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (auto v : e)
            if (++load[v] > b)
                return false;
    }
    return true;
}

bool is_fractional_transversal(const Hypergraph& h, const Vector& weights)
{
    if (weights.size() != h.vertex_count)
        return false;
    if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) < 0; }))
        return false;
    for (const auto& e : normalized_edges(h)) {
        Rational s = 0;
        for (auto v : e)
            s += weights[v];
        if (s < 1)
            return false;
    }
    return true;
}

bool is_fractional_matching(const Hypergraph& h, const Vector& weights)
{
    if (weights.size() != h.edges.size())
        return false;
    if (std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return sgn(w) < 0; }))
        return false;
    Vector load(h.vertex_count, Rational(0));
    auto edges = normalized_edges(h);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (auto v : edges[i])
            load[v] += weights[i];
    return std::all_of(load.begin(), load.end(), [](const Rational& x) { return x <= 1; });
}

TransversalResult greedy_transversal(const Hypergraph& h)
{
    TransversalResult r;
    r.witness = greedy_cover(h);
    r.tau = r.witness.size();
    r.upper_bound_only = true;
    r.lower_bound = h.edges.empty() ? 0 : 1;
    return r;
}

TransversalResult tau(const Hypergraph& h, const SearchBudget& budget)
{
    TransversalResult result;
    for (const auto& piece : reduce_for_transversal(h)) {
        if (piece.vertices.size() > budget.max_tau_vertices || piece.edges.size() > budget.max_tau_edges)
            throw ScaleError("exact transversal search needs a component with " +
                             std::to_string(piece.vertices.size()) + " vertices and " +
                             std::to_string(piece.edges.size()) + " edges after reduction (budget " +
                             std::to_string(budget.max_tau_vertices) + "/" +
                             std::to_string(budget.max_tau_edges) + ")");
        Hypergraph g = relabel(piece);
        Rational lp_bound = ceil_rational(tau_star(g).value);
        HittingSetSearch search(g, lp_bound.get_num().get_ui(), greedy_cover(g));
        search.run();
        result.nodes_explored += search.nodes();
        for (auto v : search.best())
            result.witness.push_back(piece.vertices[v]);
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.tau = result.witness.size();
    result.lower_bound = result.tau;
    if (!is_transversal(h, result.witness))
        throw TheoremViolation("transversal search returned a non-hitting set");
    return result;
}

FractionalResult tau_star(const Hypergraph& h)
{
    require_edges(h);
    auto edges = normalized_edges(h);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    LpProblem lp;
    lp.num_vars = h.vertex_count;
    lp.objective.assign(h.vertex_count, Rational(-1));
    for (const auto& e : edges) {
        Vector row(h.vertex_count, Rational(0));
        for (auto v : e)
            row[v] = -1;
        lp.constraints.push_back({std::move(row), Relation::LessEqual, Rational(-1)});
    }
    lp.bounds.assign(h.vertex_count, VariableBound{Rational(0), std::nullopt});
    auto out = lp_solve(lp);
    const auto* opt = std::get_if<LpOptimal>(&out);
    if (!opt)
        throw TheoremViolation("fractional transversal LP is not bounded and feasible");
    FractionalResult r{-opt->value, opt->point};
    if (!is_fractional_transversal(h, r.weights))
        throw TheoremViolation("fractional transversal failed verification");
    return r;
}

FractionalResult nu_star(const Hypergraph& h)
{
    require_edges(h);
    auto edges = normalized_edges(h);
    LpProblem lp;
    lp.num_vars = edges.size();
    lp.objective.assign(edges.size(), Rational(1));
    std::vector<Vector> rows(h.vertex_count, Vector(edges.size(), Rational(0)));
    std::vector<bool> used(h.vertex_count, false);
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (auto v : edges[i]) {
            rows[v][i] = 1;
            used[v] = true;
        }
    for (std::size_t v = 0; v < h.vertex_count; ++v)
        if (used[v])
            lp.constraints.push_back({std::move(rows[v]), Relation::LessEqual, Rational(1)});
    lp.bounds.assign(edges.size(), VariableBound{Rational(0), std::nullopt});
    auto out = lp_solve(lp);
    const auto* opt = std::get_if<LpOptimal>(&out);
    if (!opt)
        throw TheoremViolation("fractional matching LP is not bounded and feasible");
    FractionalResult r{opt->value, opt->point};
    if (!is_fractional_matching(h, r.weights))
        throw TheoremViolation("fractional matching failed verification");
    return r;
}

BMatchingResult nu_b(const Hypergraph& h, std::size_t b, const SearchBudget& budget)
{
    require_edges(h);
    if (b == 0)
        throw InputError("b must be at least 1");
    auto edges = normalized_edges(h);
    std::size_t count = 0;
    auto comp = edge_components(edges, h.vertex_count, count);

    BMatchingResult result;
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<std::vector<std::size_t>> sub;
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (comp[i] == c) {
                sub.push_back(edges[i]);
                ids.push_back(i);
            }
        if (sub.size() > budget.max_tau_edges)
            throw ScaleError("b-matching search needs a component with " + std::to_string(sub.size()) +
                             " edges (budget " + std::to_string(budget.max_tau_edges) + ")");
        Hypergraph g{h.vertex_count, sub, {}};
        Rational cap = floor_rational(Rational(static_cast<unsigned long>(b)) * nu_star(g).value);
        std::vector<std::size_t> order(sub.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto z) { return sub[a].size() < sub[z].size(); });
        std::vector<std::vector<std::size_t>> sorted_edges;
        std::vector<std::size_t> sorted_ids;
        for (auto i : order) {
            sorted_edges.push_back(sub[i]);
            sorted_ids.push_back(ids[i]);
        }
        BMatchingSearch search(std::move(sorted_edges), std::move(sorted_ids), h.vertex_count, b,
                               cap.get_num().get_ui());
        search.run();
        result.edges.insert(result.edges.end(), search.best().begin(), search.best().end());
    }
    std::sort(result.edges.begin(), result.edges.end());
    result.size = result.edges.size();
    if (!is_b_matching(h, result.edges, b))
        throw TheoremViolation("b-matching search returned an overloaded selection");
    return result;
}

DualityReport duality_report(const Hypergraph& h, std::size_t b, const SearchBudget& budget)
{
    DualityReport r;
    r.b = b;
    r.tau_star = tau_star(h);
    r.nu_star = nu_star(h);
    try {
        r.nu_b = nu_b(h, b, budget);
        r.tau = tau(h, budget);
    } catch (const ScaleError& e) {
        r.scale_error = e.what();
    }
    bool ok = r.nu_star.value == r.tau_star.value;
    if (r.nu_b)
        ok = ok && Rational(static_cast<unsigned long>(r.nu_b->size)) /
                           Rational(static_cast<unsigned long>(b)) <=
                       r.nu_star.value;
    if (r.tau)
        ok = ok && r.tau_star.value <= Rational(static_cast<unsigned long>(r.tau->tau));
    r.sandwich_holds = ok;
    if (!ok)
        throw TheoremViolation("duality sandwich nu_b/b <= nu* = tau* <= tau failed");
    return r;
}

} // namespace chelly
