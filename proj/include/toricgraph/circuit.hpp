// circuit.hpp -- layered circuit representation over {H, CX, CZ, X, Z}.
//
// A circuit is an ordered list of layers; within a layer no qubit appears
// twice, so every layer is parallel-executable and depth = layer count.
// Depth claims are the headline result here, so layers are first-class
// rather than a flat gate list. Qubit indices are 1-based.

#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace toricgraph {

enum class GateKind { H, CX, CZ, X, Z };

inline const char *gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::CX: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
    }
    return "?";
}

struct Gate {
    GateKind kind;
    std::size_t q1 = 0;
    std::size_t q2 = 0;  // 0 for single-qubit gates

    bool two_qubit() const { return kind == GateKind::CX || kind == GateKind::CZ; }
};

inline Gate h(std::size_t q) { return {GateKind::H, q, 0}; }
inline Gate x(std::size_t q) { return {GateKind::X, q, 0}; }
inline Gate z(std::size_t q) { return {GateKind::Z, q, 0}; }
inline Gate cx(std::size_t c, std::size_t t) { return {GateKind::CX, c, t}; }
inline Gate cz(std::size_t a, std::size_t b) { return {GateKind::CZ, a, b}; }

using Layer = std::vector<Gate>;

struct DepthReport {
    std::size_t total = 0;
    std::size_t h_layers = 0;
    std::size_t non_h = 0;
    std::size_t cx_gates = 0;
    std::size_t cz_gates = 0;
    std::size_t h_gates = 0;
};

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n) : n_qubits_(n) {}

    std::size_t n_qubits() const { return n_qubits_; }
    const std::vector<Layer> &layers() const { return layers_; }
    std::size_t depth() const { return layers_.size(); }

    void add_layer(Layer layer) {
        validate_layer(layer);
        layers_.push_back(std::move(layer));
    }

    // Concatenate another circuit's layers after this one.
    void append(const Circuit &other) {
        if (other.n_qubits_ != n_qubits_)
            throw std::invalid_argument("Circuit::append: qubit count mismatch");
        for (const Layer &l : other.layers_) add_layer(l);
    }

    // Merge another circuit of equal depth layer-by-layer; the two must act
    // on disjoint qubits within each layer (checked by add_layer's rules).
    void merge_layerwise(const Circuit &other) {
        if (other.n_qubits_ != n_qubits_)
            throw std::invalid_argument("Circuit::merge_layerwise: qubit count mismatch");
        if (other.depth() != depth())
            throw std::invalid_argument("Circuit::merge_layerwise: depth mismatch");
        for (std::size_t k = 0; k < layers_.size(); ++k) {
            Layer merged = layers_[k];
            merged.insert(merged.end(), other.layers_[k].begin(), other.layers_[k].end());
            validate_layer(merged);
            layers_[k] = std::move(merged);
        }
    }

    // Same circuit on a larger register, with local qubit k mapped to map[k-1].
    Circuit remap(std::size_t new_n, const std::vector<std::size_t> &map) const {
        if (map.size() != n_qubits_) throw std::invalid_argument("Circuit::remap: map size mismatch");
        Circuit out(new_n);
        for (const Layer &l : layers_) {
            Layer nl;
            nl.reserve(l.size());
            for (const Gate &g : l)
                nl.push_back({g.kind, map.at(g.q1 - 1), g.two_qubit() ? map.at(g.q2 - 1) : 0});
            out.add_layer(std::move(nl));
        }
        return out;
    }

    Circuit reversed() const {
        Circuit out(n_qubits_);
        for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) out.add_layer(*it);
        return out;
    }

    DepthReport depth_report() const {
        DepthReport r;
        r.total = layers_.size();
        for (const Layer &l : layers_) {
            bool all_h = !l.empty();
            for (const Gate &g : l) {
                if (g.kind != GateKind::H) all_h = false;
                if (g.kind == GateKind::CX) ++r.cx_gates;
                if (g.kind == GateKind::CZ) ++r.cz_gates;
                if (g.kind == GateKind::H) ++r.h_gates;
            }
            if (all_h)
                ++r.h_layers;
            else
                ++r.non_h;
        }
        return r;
    }

    // Depth with pure-Hadamard layers excluded, matching the gate-count
    // framing used for the log-depth bounds.
    std::size_t non_h_depth() const { return depth_report().non_h; }

    nlohmann::json to_json() const {
        nlohmann::json layers = nlohmann::json::array();
        for (const Layer &l : layers_) {
            nlohmann::json jl = nlohmann::json::array();
            for (const Gate &g : l) {
                nlohmann::json jg{{"kind", gate_name(g.kind)}, {"qubits", nlohmann::json::array({g.q1})}};
                if (g.two_qubit()) jg["qubits"].push_back(g.q2);
                jl.push_back(std::move(jg));
            }
            layers.push_back(std::move(jl));
        }
        return nlohmann::json{{"n_qubits", n_qubits_}, {"layers", std::move(layers)}};
    }

    // QASM-like text, one layer per stanza separated by blank lines.
    std::string to_qasm_text() const {
        std::ostringstream os;
        os << "qubits " << n_qubits_ << "\n";
        for (const Layer &l : layers_) {
            os << "\n";
            for (const Gate &g : l) {
                os << gate_name(g.kind) << " q[" << g.q1 << "]";
                if (g.two_qubit()) os << ",q[" << g.q2 << "]";
                os << "\n";
            }
        }
        return os.str();
    }

  private:
    void validate_layer(const Layer &layer) const {
        std::set<std::size_t> used;
        for (const Gate &g : layer) {
            if (g.q1 < 1 || g.q1 > n_qubits_) throw std::out_of_range("gate qubit out of range");
            if (!used.insert(g.q1).second) throw std::invalid_argument("qubit used twice in one layer");
            if (g.two_qubit()) {
                if (g.q2 < 1 || g.q2 > n_qubits_) throw std::out_of_range("gate qubit out of range");
                if (g.q2 == g.q1) throw std::invalid_argument("two-qubit gate needs distinct qubits");
                if (!used.insert(g.q2).second)
                    throw std::invalid_argument("qubit used twice in one layer");
            }
        }
    }

    std::size_t n_qubits_ = 0;
    std::vector<Layer> layers_;
};

}  // namespace toricgraph
