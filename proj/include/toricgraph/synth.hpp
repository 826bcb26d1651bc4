// synth.hpp -- log-depth circuit synthesis for star, half and toric graph
// states, the naive per-edge baseline, and the unknown-state encoder.
//
// Every synthesizer factors as H^{otimes N} followed by a diagonal phase
// circuit; the *_phase_circuit functions expose the diagonal parts so the
// toric composition and the encoder can merge them across disjoint qubit
// sets. Clamping of parity-network targets (min{i + 2^{d-1}, bound})
// handles register sizes that are not powers of two.

#pragma once

#include "toricgraph/circuit.hpp"
#include "toricgraph/graphs.hpp"
#include "toricgraph/lattice.hpp"
#include "toricgraph/standard_form.hpp"

namespace toricgraph {

inline std::size_t ceil_log2(std::size_t x) {
    std::size_t d = 0;
    while ((std::size_t(1) << d) < x) ++d;
    return d;
}

// CX tree computing the XOR of registers 1..regsize into register regsize,
// one layer per level d: CX(i, min(i + 2^{d-1}, regsize)) for every
// i = 2^{d-1} (mod 2^d).
inline std::vector<Layer> parity_network_layers(std::size_t regsize) {
    std::vector<Layer> layers;
    for (std::size_t d = 1; d <= ceil_log2(regsize); ++d) {
        Layer layer;
        const std::size_t step = std::size_t(1) << d, half = step / 2;
        for (std::size_t i = half; i <= regsize; i += step) {
            const std::size_t target = std::min(i + half, regsize);
            if (target != i) layer.push_back(cx(i, target));
        }
        layers.push_back(std::move(layer));
    }
    return layers;
}

// Diagonal part of the star synthesizer on m qubits (centre = qubit m):
// P, CZ(m-1, m), P^{-1} with P the parity network over qubits 1..m-1.
// Non-H depth is exactly 2 ceil(log2(m-1)) + 1.
inline Circuit star_phase_circuit(std::size_t m) {
    if (m < 2) throw std::invalid_argument("star_phase_circuit: need m >= 2");
    Circuit c(m);
    const auto net = parity_network_layers(m - 1);
    for (const Layer &l : net) c.add_layer(l);
    c.add_layer({cz(m - 1, m)});
    for (auto it = net.rbegin(); it != net.rend(); ++it) c.add_layer(*it);
    return c;
}

inline Circuit synth_star(std::size_t m) {
    Circuit c(m);
    Layer hs;
    for (std::size_t q = 1; q <= m; ++q) hs.push_back(h(q));
    c.add_layer(std::move(hs));
    c.append(star_phase_circuit(m));
    return c;
}

enum class HalfSchedule {
    Deferred,   // parities reused across levels, uncompute once at the end: O(log n)
    Immediate,  // recompute/uncompute per level: O(log^2 n), kept for differential testing
};

// Diagonal part of the half-graph synthesizer on 2n qubits with
// x_i = qubit i and y_i = qubit n+i. Level 0 is the CZ(x_i, y_i) layer;
// level d >= 1 contributes one CZ layer (on parities of level d-1) and one
// CX layer advancing both registers' parity networks.
inline Circuit half_phase_circuit(std::size_t n, HalfSchedule schedule = HalfSchedule::Deferred) {
    if (n < 1) throw std::invalid_argument("half_phase_circuit: need n >= 1");
    Circuit c(2 * n);

    Layer f0;
    for (std::size_t i = 1; i <= n; ++i) f0.push_back(cz(i, n + i));
    c.add_layer(std::move(f0));

    const std::size_t levels = ceil_log2(n);
    std::vector<Layer> cz_layers(levels), cx_layers(levels);
    for (std::size_t d = 1; d <= levels; ++d) {
        const std::size_t step = std::size_t(1) << d, half = step / 2;
        for (std::size_t i = half; i <= n; i += step) {
            if (i >= n) continue;  // clamped term has an empty p-sum
            const std::size_t t = std::min(i + half, n);
            cz_layers[d - 1].push_back(cz(i, n + t));
            cx_layers[d - 1].push_back(cx(i, t));
            cx_layers[d - 1].push_back(cx(n + i, n + t));
        }
    }

    if (schedule == HalfSchedule::Deferred) {
        for (std::size_t d = 0; d < levels; ++d) {
            c.add_layer(cz_layers[d]);
            c.add_layer(cx_layers[d]);
        }
        for (std::size_t d = levels; d-- > 0;) c.add_layer(cx_layers[d]);
    } else {
        for (std::size_t k = 0; k < levels; ++k) {
            for (std::size_t d = 0; d < k; ++d) c.add_layer(cx_layers[d]);
            c.add_layer(cz_layers[k]);
            for (std::size_t d = k; d-- > 0;) c.add_layer(cx_layers[d]);
        }
    }
    return c;
}

inline Circuit synth_half(std::size_t n, HalfSchedule schedule = HalfSchedule::Deferred) {
    Circuit c(2 * n);
    Layer hs;
    for (std::size_t q = 1; q <= 2 * n; ++q) hs.push_back(h(q));
    c.add_layer(std::move(hs));
    c.append(half_phase_circuit(n, schedule));
    return c;
}

// One H layer then the CZ of every edge, greedily packed into
// non-conflicting layers; depth is at least the maximum vertex degree.
inline Circuit naive_graph_circuit(const Graph &g) {
    Circuit c(g.n());
    Layer hs;
    for (std::size_t q = 1; q <= g.n(); ++q) hs.push_back(h(q));
    c.add_layer(std::move(hs));

    std::vector<Layer> cz_layers;
    std::vector<std::set<std::size_t>> used;
    for (auto [u, v] : g.edges()) {
        std::size_t k = 0;
        while (k < cz_layers.size() && (used[k].count(u) || used[k].count(v))) ++k;
        if (k == cz_layers.size()) {
            cz_layers.emplace_back();
            used.emplace_back();
        }
        cz_layers[k].push_back(cz(u, v));
        used[k].insert(u);
        used[k].insert(v);
    }
    for (Layer &l : cz_layers) c.add_layer(std::move(l));
    return c;
}

namespace detail {

// Lattice qubits of the star component (j,d), centre last: for d = x the
// vertices (1..L, j, x) with centre (L,j,x); for d = y the vertices
// (2..L, j, y) then the centre (1,j,y).
inline std::vector<std::size_t> star_component_map(std::size_t j, Dir d, const LatticeParams &p) {
    std::vector<std::size_t> map;
    if (d == Dir::X) {
        for (std::size_t i = 1; i <= p.L; ++i) map.push_back(qubit_index({i, j, Dir::X}, p));
    } else {
        for (std::size_t i = 2; i <= p.L; ++i) map.push_back(qubit_index({i, j, Dir::Y}, p));
        map.push_back(qubit_index({1, j, Dir::Y}, p));
    }
    return map;
}

// Half-graph component j of layer 1 (x column j paired with y column j) or
// layer 2 (x column j+1 paired with y column j). Local x_u -> (u, jx, x) for
// u = 1..L-1 and local y_w -> (w+1, j, y); the component centres (L,j,x) and
// (1,j,y) are isolated in these layers and do not appear.
inline std::vector<std::size_t> half_component_map(std::size_t j, int layer,
                                                   const LatticeParams &p) {
    const std::size_t jx = layer == 1 ? j : p.wrap(static_cast<long long>(j) + 1);
    std::vector<std::size_t> map;
    for (std::size_t u = 1; u <= p.L - 1; ++u) map.push_back(qubit_index({u, jx, Dir::X}, p));
    for (std::size_t w = 1; w <= p.L - 1; ++w) map.push_back(qubit_index({w + 1, j, Dir::Y}, p));
    return map;
}

}  // namespace detail

// Diagonal U^mstar: the 2L star phase circuits merged layer-by-layer (all
// components share the same depth and act on disjoint qubits).
inline Circuit mstar_phase(const LatticeParams &p) {
    const Circuit local = star_phase_circuit(p.L);
    Circuit merged = local.remap(p.n_qubits(), detail::star_component_map(1, Dir::X, p));
    for (std::size_t j = 2; j <= p.L; ++j)
        merged.merge_layerwise(local.remap(p.n_qubits(), detail::star_component_map(j, Dir::X, p)));
    for (std::size_t j = 1; j <= p.L; ++j)
        merged.merge_layerwise(local.remap(p.n_qubits(), detail::star_component_map(j, Dir::Y, p)));
    return merged;
}

// Diagonal U^mhalf: the L half1 components merged, then the L half2
// components merged.
inline Circuit mhalf_phase(const LatticeParams &p, HalfSchedule schedule = HalfSchedule::Deferred) {
    const Circuit local = half_phase_circuit(p.L - 1, schedule);
    Circuit out(p.n_qubits());
    for (int layer = 1; layer <= 2; ++layer) {
        Circuit merged = local.remap(p.n_qubits(), detail::half_component_map(1, layer, p));
        for (std::size_t j = 2; j <= p.L; ++j)
            merged.merge_layerwise(local.remap(p.n_qubits(), detail::half_component_map(j, layer, p)));
        out.append(merged);
    }
    return out;
}

// |G_toric> = U^mhalf U^mstar H^{otimes 2L^2} |0...0>.
inline Circuit synth_toric(const LatticeParams &p, HalfSchedule schedule = HalfSchedule::Deferred) {
    Circuit c(p.n_qubits());
    Layer hs;
    for (std::size_t q = 1; q <= p.n_qubits(); ++q) hs.push_back(h(q));
    c.add_layer(std::move(hs));
    c.append(mstar_phase(p));
    c.append(mhalf_phase(p, schedule));
    return c;
}

struct EncoderStages {
    Circuit ghz;    // U^GHZ x U^GHZ on the two centre groups
    Circuit mstar;  // H on all qubits then U^mstar (repetition-code stage)
    Circuit mhalf;  // U^mhalf

    Circuit combined() const {
        Circuit c = ghz;
        c.append(mstar);
        c.append(mhalf);
        return c;
    }
};

// Encoder for an arbitrary unknown 2-qubit state. The data qubits are
// (L,1,x) (the Z_alpha logical, coefficient c3) and (1,1,y) (the Z_beta
// logical, coefficient c2); all other qubits must start in |0>. The circuit
// applies U^GHZ on each group of star centres (spreading each data bit into
// an L-fold repetition across centres), then H everywhere followed by
// U^mstar (producing the repetition-code state over star components), then
// U^mhalf.
inline EncoderStages synth_encoder_stages(const LatticeParams &p,
                                          HalfSchedule schedule = HalfSchedule::Deferred) {
    const std::size_t n = p.n_qubits();

    // U^GHZ = (H^{x L-1} (x) I) U^star (H^{x L-1} (x) I) on L qubits
    Circuit ughz(p.L);
    Layer hs;
    for (std::size_t q = 1; q + 1 <= p.L; ++q) hs.push_back(h(q));
    ughz.add_layer(hs);
    ughz.append(star_phase_circuit(p.L));
    ughz.add_layer(hs);

    // centre groups ordered j = 2..L then j = 1, so the data qubit sits last
    std::vector<std::size_t> group_a, group_b;
    for (std::size_t j = 2; j <= p.L; ++j) {
        group_a.push_back(qubit_index({p.L, j, Dir::X}, p));
        group_b.push_back(qubit_index({1, j, Dir::Y}, p));
    }
    group_a.push_back(qubit_index({p.L, 1, Dir::X}, p));
    group_b.push_back(qubit_index({1, 1, Dir::Y}, p));

    EncoderStages s{Circuit(n), Circuit(n), Circuit(n)};
    s.ghz = ughz.remap(n, group_a);
    s.ghz.merge_layerwise(ughz.remap(n, group_b));

    Layer all_h;
    for (std::size_t q = 1; q <= n; ++q) all_h.push_back(h(q));
    s.mstar.add_layer(std::move(all_h));
    s.mstar.append(mstar_phase(p));

    s.mhalf = mhalf_phase(p, schedule);
    return s;
}

inline Circuit synth_encoder(const LatticeParams &p,
                             HalfSchedule schedule = HalfSchedule::Deferred) {
    return synth_encoder_stages(p, schedule).combined();
}

// Logical Z strings on the star centres: Z_alpha on (L,j,x), Z_beta on (1,j,y).
inline PauliOp logical_z_alpha(const LatticeParams &p) {
    PauliOp op(p.n_qubits());
    for (std::size_t j = 1; j <= p.L; ++j) op.z.set(qubit_index({p.L, j, Dir::X}, p), true);
    return op;
}

inline PauliOp logical_z_beta(const LatticeParams &p) {
    PauliOp op(p.n_qubits());
    for (std::size_t j = 1; j <= p.L; ++j) op.z.set(qubit_index({1, j, Dir::Y}, p), true);
    return op;
}

}  // namespace toricgraph
