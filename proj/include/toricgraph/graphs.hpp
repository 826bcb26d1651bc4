// graphs.hpp -- simple graphs, their binary quadratic forms, and the
// star / half graph families together with graph-state oracles.
//
// The graph state for adjacency A has amplitudes (-1)^{f_G(q)} / 2^{n/2}
// with f_G(q) = sum_{i<j} A_ij q_i q_j mod 2. graph_state_vector evaluates
// that formula directly and serves as the independent oracle against which
// all synthesized circuits are checked.

#pragma once

#include <vector>

#include <json.hpp>

#include "toricgraph/gf2.hpp"
#include "toricgraph/statevec.hpp"

namespace toricgraph {

// Symmetric zero-diagonal GF(2) matrix: a simple graph on n vertices.
class Adjacency {
  public:
    Adjacency() = default;
    explicit Adjacency(std::size_t n) : mat_(n, n) {}

    explicit Adjacency(BitMat m) : mat_(std::move(m)) {
        if (mat_.rows() != mat_.cols()) throw std::invalid_argument("Adjacency: matrix not square");
        if (mat_ != mat_.transpose()) throw std::invalid_argument("Adjacency: matrix not symmetric");
        for (std::size_t v = 1; v <= mat_.rows(); ++v)
            if (mat_.get(v, v)) throw std::invalid_argument("Adjacency: nonzero diagonal");
    }

    std::size_t n() const { return mat_.rows(); }
    const BitMat &matrix() const { return mat_; }

    bool edge(std::size_t u, std::size_t v) const { return mat_.get(u, v); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("Adjacency: no self loops");
        mat_.set(u, v, true);
        mat_.set(v, u, true);
    }

    std::size_t degree(std::size_t v) const { return mat_.row(v).weight(); }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t u = 1; u <= n(); ++u)
            for (std::size_t v = u + 1; v <= n(); ++v)
                if (edge(u, v)) e.emplace_back(u, v);
        return e;
    }

    std::size_t num_edges() const { return edges().size(); }

    bool operator==(const Adjacency &o) const { return mat_ == o.mat_; }
    bool operator!=(const Adjacency &o) const { return !(*this == o); }

    // Entrywise XOR; only meaningful when supports are disjoint.
    friend Adjacency operator^(const Adjacency &a, const Adjacency &b) {
        return Adjacency(a.mat_ ^ b.mat_);
    }

    // True when no edge appears in both graphs.
    bool disjoint_support(const Adjacency &o) const {
        for (std::size_t u = 1; u <= n(); ++u)
            if (mat_.row(u).intersects(o.mat_.row(u))) return false;
        return true;
    }

    nlohmann::json to_json() const {
        nlohmann::json je = nlohmann::json::array();
        for (auto [u, v] : edges()) je.push_back(nlohmann::json::array({u, v}));
        return nlohmann::json{{"n", n()}, {"edges", std::move(je)}};
    }

    std::string to_edge_list() const {
        std::string s;
        for (auto [u, v] : edges()) s += std::to_string(u) + " " + std::to_string(v) + "\n";
        return s;
    }

  private:
    BitMat mat_;
};

using Graph = Adjacency;

// Star graph on m vertices: the centre is adjacent to all others.
inline Graph star_graph(std::size_t m, std::size_t center) {
    if (m < 2) throw std::invalid_argument("star_graph: need at least 2 vertices");
    if (center < 1 || center > m) throw std::out_of_range("star_graph: center out of range");
    Graph g(m);
    for (std::size_t v = 1; v <= m; ++v)
        if (v != center) g.add_edge(v, center);
    return g;
}

// Half graph on 2n vertices: x_i = vertex i, y_j = vertex n+j, with edge
// (x_i, y_j) iff i <= j. Has n(n+1)/2 edges.
inline Graph half_graph(std::size_t n) {
    if (n < 1) throw std::invalid_argument("half_graph: need n >= 1");
    Graph g(2 * n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j <= n; ++j) g.add_edge(i, n + j);
    return g;
}

// f_G(q) = sum_{i<j} A_ij q_i q_j mod 2.
inline bool quad_form_eval(const Graph &g, const BitVec &q) {
    if (q.size() != g.n()) throw std::invalid_argument("quad_form_eval: length mismatch");
    bool f = false;
    for (std::size_t i = 1; i <= g.n(); ++i)
        if (q.get(i))
            for (std::size_t j = i + 1; j <= g.n(); ++j)
                if (q.get(j) && g.edge(i, j)) f = !f;
    return f;
}

// Signed amplitude (-1)^{f_G(basis)} / 2^{n/2}.
inline double graph_state_amplitude(const Graph &g, const BitVec &basis) {
    const double mag = std::pow(2.0, -0.5 * static_cast<double>(g.n()));
    return quad_form_eval(g, basis) ? -mag : mag;
}

// Full graph-state oracle vector (basis bit 1 = most significant index bit).
inline StateVec graph_state_vector(const Graph &g) {
    const std::size_t n = g.n();
    StateVec s(n);
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        BitVec q(n);
        for (std::size_t k = 1; k <= n; ++k)
            if (idx & (std::size_t(1) << (n - k))) q.set(k, true);
        s[idx] = graph_state_amplitude(g, q);
    }
    return s;
}

// (|0^m> + sign |1^m>)/sqrt(2).
inline StateVec ghz_reference(std::size_t m, int sign) {
    if (m < 1) throw std::invalid_argument("ghz_reference: need m >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("ghz_reference: sign must be +1 or -1");
    StateVec s(m);
    const double a = 1.0 / std::sqrt(2.0);
    s[0] = a;
    s[s.dim() - 1] = sign * a;
    return s;
}

}  // namespace toricgraph
