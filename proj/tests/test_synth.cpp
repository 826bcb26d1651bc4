#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "phase_oracle.hpp"
#include "toricgraph/synth.hpp"

using namespace toricgraph;

namespace {

void check_exact_match(const StateVec &got, const StateVec &expect) {
    REQUIRE(got.n_qubits() == expect.n_qubits());
    for (std::size_t i = 0; i < got.dim(); ++i) {
        CHECK(std::abs(got[i].real() - expect[i].real()) < 1e-10);
        CHECK(std::abs(got[i].imag()) < 1e-10);
    }
}

Circuit strip_cz(const Circuit &c) {
    Circuit out(c.n_qubits());
    for (const Layer &l : c.layers()) {
        Layer kept;
        for (const Gate &g : l)
            if (g.kind != GateKind::CZ) kept.push_back(g);
        if (!kept.empty()) out.add_layer(std::move(kept));
    }
    return out;
}

}  // namespace

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(64) == 6);
}

TEST_CASE("parity network block sums at every level") {
    for (std::size_t regsize = 1; regsize <= 31; ++regsize) {
        std::vector<BitVec> wires;
        for (std::size_t q = 1; q <= regsize; ++q) {
            BitVec e(regsize);
            e.set(q, true);
            wires.push_back(e);
        }
        const auto layers = parity_network_layers(regsize);
        for (std::size_t d = 1; d <= layers.size(); ++d) {
            for (const Gate &g : layers[d - 1]) wires[g.q2 - 1] ^= wires[g.q1 - 1];
            const std::size_t block = std::size_t(1) << d;
            for (std::size_t c = 1; c * block <= regsize; ++c) {
                BitVec expect(regsize);
                for (std::size_t q = (c - 1) * block + 1; q <= c * block; ++q) expect.set(q, true);
                CHECK(wires[c * block - 1] == expect);
            }
            // the clamped tail accumulates into the last register
            BitVec tail(regsize);
            for (std::size_t q = (regsize / block) * block + 1; q <= regsize; ++q)
                tail.set(q, true);
            if (!tail.is_zero()) CHECK(wires[regsize - 1] == tail);
        }
        if (!layers.empty()) {
            BitVec all(regsize);
            for (std::size_t q = 1; q <= regsize; ++q) all.set(q, true);
            CHECK(wires[regsize - 1] == all);
        }
    }
}

TEST_CASE("star synthesizer matches the oracle") {
    for (std::size_t m = 2; m <= 10; ++m) {
        const StateVec got = apply_circuit(StateVec(m), synth_star(m));
        check_exact_match(got, graph_state_vector(star_graph(m, m)));
        CHECK(got.norm() == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(synth_star(1), std::invalid_argument);
}

TEST_CASE("star non-H depth is exactly 2 ceil(log2(m-1)) + 1") {
    for (std::size_t m = 2; m <= 64; ++m)
        CHECK(synth_star(m).non_h_depth() == 2 * ceil_log2(m - 1) + 1);
    CHECK(synth_star(9).non_h_depth() == 7);
    CHECK(synth_star(9).depth() == 8);
    CHECK(synth_star(2).depth() == 2);  // H layer then one CZ
}

TEST_CASE("star phase polynomial at large m") {
    for (std::size_t m : {2, 3, 5, 8, 17, 33, 64}) {
        PhaseOracle oracle(m);
        oracle.apply(star_phase_circuit(m));
        CHECK(oracle.phase_matches(star_graph(m, m)));
    }
}

TEST_CASE("half synthesizer matches the oracle, both schedules") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (HalfSchedule sched : {HalfSchedule::Deferred, HalfSchedule::Immediate}) {
            const StateVec got = apply_circuit(StateVec(2 * n), synth_half(n, sched));
            check_exact_match(got, graph_state_vector(half_graph(n)));
        }
}

TEST_CASE("half non-H depth within the log bound") {
    for (std::size_t n = 1; n <= 64; ++n) {
        const std::size_t d = synth_half(n).non_h_depth();
        CHECK(d == 3 * ceil_log2(n) + 1);
        CHECK(d <= 3 * ceil_log2(n) + 2);
    }
    CHECK(synth_half(1).non_h_depth() == 1);
}

TEST_CASE("half phase polynomial at large n, both schedules") {
    for (std::size_t n : {1, 2, 3, 5, 8, 13, 32, 64})
        for (HalfSchedule sched : {HalfSchedule::Deferred, HalfSchedule::Immediate}) {
            PhaseOracle oracle(2 * n);
            oracle.apply(half_phase_circuit(n, sched));
            CHECK(oracle.phase_matches(half_graph(n)));
        }
}

TEST_CASE("stripping CZ layers leaves an identity network") {
    for (std::size_t m : {2, 5, 9, 20, 64}) {
        PhaseOracle oracle(m);
        oracle.apply(strip_cz(star_phase_circuit(m)));
        CHECK(oracle.wires_identity());
        CHECK(oracle.linear_part_zero());
        CHECK(oracle.quadratic_part() == BitMat(m, m));
    }
    for (std::size_t n : {1, 3, 8, 33})
        for (HalfSchedule sched : {HalfSchedule::Deferred, HalfSchedule::Immediate}) {
            PhaseOracle oracle(2 * n);
            oracle.apply(strip_cz(half_phase_circuit(n, sched)));
            CHECK(oracle.wires_identity());
        }
}

TEST_CASE("naive synthesizer matches the oracle on random graphs") {
    std::mt19937 rng(2024);
    std::bernoulli_distribution edge(0.4);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + trial % 6;
        Graph g(n);
        for (std::size_t u = 1; u <= n; ++u)
            for (std::size_t v = u + 1; v <= n; ++v)
                if (edge(rng)) g.add_edge(u, v);
        const StateVec got = apply_circuit(StateVec(n), naive_graph_circuit(g));
        check_exact_match(got, graph_state_vector(g));
    }
}

TEST_CASE("naive depth scales with degree, synthesized does not") {
    CHECK(naive_graph_circuit(star_graph(5, 5)).non_h_depth() >= 4);
    CHECK(naive_graph_circuit(Graph(4)).depth() == 1);  // empty graph: one H layer
    CHECK(naive_graph_circuit(star_graph(64, 64)).non_h_depth() == 63);
    CHECK(synth_star(64).non_h_depth() == 13);
}

TEST_CASE("toric synthesizer matches the oracle at L=2") {
    const LatticeParams p(2);
    const StateVec got = apply_circuit(StateVec(p.n_qubits()), synth_toric(p));
    check_exact_match(got, graph_state_vector(closed_form_adjacency(p)));
}

TEST_CASE("mstar sub-circuit alone prepares the star-layer graph state") {
    const LatticeParams p(2);
    const ToricDecomposition d = decompose_adjacency(closed_form_adjacency(p), p);
    Circuit c(p.n_qubits());
    Layer hs;
    for (std::size_t q = 1; q <= p.n_qubits(); ++q) hs.push_back(h(q));
    c.add_layer(std::move(hs));
    c.append(mstar_phase(p));
    check_exact_match(apply_circuit(StateVec(p.n_qubits()), c), graph_state_vector(d.mstar));
    CHECK(d.mstar.num_edges() == 4);  // four disjoint single edges at L=2
}

TEST_CASE("toric phase polynomial at larger L") {
    for (std::size_t L : {2, 3, 4, 5, 8, 16}) {
        const LatticeParams p(L);
        const ToricDecomposition d = decompose_adjacency(closed_form_adjacency(p), p);

        PhaseOracle star_oracle(p.n_qubits());
        star_oracle.apply(mstar_phase(p));
        CHECK(star_oracle.phase_matches(d.mstar));

        PhaseOracle half_oracle(p.n_qubits());
        half_oracle.apply(mhalf_phase(p));
        CHECK(half_oracle.phase_matches(d.mhalf1 ^ d.mhalf2));

        PhaseOracle full(p.n_qubits());
        full.apply(mstar_phase(p));
        full.apply(mhalf_phase(p));
        CHECK(full.phase_matches(closed_form_adjacency(p)));
    }
}

TEST_CASE("toric depth bound") {
    for (std::size_t L = 2; L <= 64; ++L) {
        const LatticeParams p(L);
        const std::size_t star_d = star_phase_circuit(L).non_h_depth();
        const std::size_t half_d = half_phase_circuit(L - 1).non_h_depth();
        CHECK(synth_toric(p).non_h_depth() <= star_d + 2 * half_d);
    }
}

TEST_CASE("diagonal phase blocks commute: permuted component order, same state") {
    const LatticeParams p(2);
    const StateVec reference = apply_circuit(StateVec(p.n_qubits()), synth_toric(p));

    // apply the phases in the opposite order and the star components one by
    // one, last component first
    StateVec s(p.n_qubits());
    for (std::size_t q = 1; q <= p.n_qubits(); ++q) s.apply_h(q);
    s = apply_circuit(std::move(s), mhalf_phase(p));
    const Circuit local = star_phase_circuit(p.L);
    std::vector<Circuit> comps;
    for (std::size_t j = 1; j <= p.L; ++j) {
        comps.push_back(local.remap(p.n_qubits(), detail::star_component_map(j, Dir::X, p)));
        comps.push_back(local.remap(p.n_qubits(), detail::star_component_map(j, Dir::Y, p)));
    }
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) s = apply_circuit(std::move(s), *it);
    check_exact_match(s, reference);
}

TEST_CASE("half schedules agree exactly") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const StateVec a = apply_circuit(StateVec(2 * n), synth_half(n, HalfSchedule::Deferred));
        const StateVec b = apply_circuit(StateVec(2 * n), synth_half(n, HalfSchedule::Immediate));
        check_exact_match(a, b);
    }
}

TEST_CASE("circuit serialization shape") {
    const Circuit c = synth_star(3);
    const auto j = c.to_json();
    CHECK(j["n_qubits"] == 3);
    CHECK(j["layers"].size() == c.depth());
    CHECK(j["layers"][0][0]["kind"] == "h");
    const std::string text = c.to_qasm_text();
    CHECK(text.find("qubits 3") == 0);
    CHECK(text.find("cz q[") != std::string::npos);
    CHECK(c.to_json() == synth_star(3).to_json());
}

namespace {

// Reference amplitudes for the state after the GHZ and mstar stages: each
// star component (center last) carries the L-qubit star state with sign
// sigma in {+1,-1}, amplitude 2^{-L/2} (-1)^{(q_1+...+q_{L-1}) q_L + [sigma=-1] q_L}.
double star_component_amp(std::size_t L, const std::vector<int> &q, bool minus) {
    int f = 0;
    for (std::size_t k = 0; k + 1 < L; ++k) f ^= q[k] & q[L - 1];
    if (minus) f ^= q[L - 1];
    return (f ? -1.0 : 1.0) * std::pow(2.0, -0.5 * static_cast<double>(L));
}

StateVec repetition_reference(const LatticeParams &p, const std::vector<cplx> &c) {
    StateVec out(p.n_qubits());
    out[0] = 0;
    for (std::size_t idx = 0; idx < out.dim(); ++idx) {
        cplx amp = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            const bool alpha_minus = k & 2, beta_minus = k & 1;
            double prod = 1.0;
            for (std::size_t j = 1; j <= p.L; ++j)
                for (Dir d : {Dir::X, Dir::Y}) {
                    const auto map = detail::star_component_map(j, d, p);
                    std::vector<int> q;
                    for (std::size_t local = 0; local < p.L; ++local)
                        q.push_back((idx >> (p.n_qubits() - map[local])) & 1);
                    prod *= star_component_amp(p.L, q, d == Dir::X ? alpha_minus : beta_minus);
                }
            amp += c[k] * prod;
        }
        out[idx] = amp;
    }
    return out;
}

}  // namespace

TEST_CASE("encoder basis branches at L=2") {
    const LatticeParams p(2);
    const StateVec g_toric = graph_state_vector(closed_form_adjacency(p));
    const std::size_t data_alpha = qubit_index({p.L, 1, Dir::X}, p);
    const std::size_t data_beta = qubit_index({1, 1, Dir::Y}, p);
    const Circuit enc = synth_encoder(p);

    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 1; ++b) {
            StateVec in(p.n_qubits());
            if (a) in.apply_x(data_alpha);
            if (b) in.apply_x(data_beta);
            const StateVec got = apply_circuit(std::move(in), enc);
            StateVec expect = g_toric;
            if (a) expect = apply_pauli(expect, logical_z_alpha(p));
            if (b) expect = apply_pauli(expect, logical_z_beta(p));
            check_exact_match(got, expect);
        }
}

TEST_CASE("encoder on random superpositions, with the repetition-code midpoint") {
    const LatticeParams p(2);
    const StateVec g_toric = graph_state_vector(closed_form_adjacency(p));
    const std::size_t data_alpha = qubit_index({p.L, 1, Dir::X}, p);
    const std::size_t data_beta = qubit_index({1, 1, Dir::Y}, p);
    const EncoderStages stages = synth_encoder_stages(p);

    std::mt19937 rng(424242);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cplx> c(4);
        double nrm = 0;
        for (auto &ck : c) {
            ck = cplx(gauss(rng), gauss(rng));
            nrm += std::norm(ck);
        }
        for (auto &ck : c) ck /= std::sqrt(nrm);

        StateVec in(p.n_qubits());
        in[0] = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            std::size_t idx = 0;
            if (k & 2) idx |= in.bit_mask(data_alpha);
            if (k & 1) idx |= in.bit_mask(data_beta);
            in[idx] = c[k];
        }

        StateVec mid = apply_circuit(in, stages.ghz);
        mid = apply_circuit(std::move(mid), stages.mstar);
        CHECK(fidelity(mid, repetition_reference(p, c)) == doctest::Approx(1.0).epsilon(1e-10));

        const StateVec got = apply_circuit(mid, stages.mhalf);
        StateVec target(p.n_qubits());
        target[0] = 0;
        const StateVec za = apply_pauli(g_toric, logical_z_alpha(p));
        const StateVec zb = apply_pauli(g_toric, logical_z_beta(p));
        const StateVec zab = apply_pauli(za, logical_z_beta(p));
        for (std::size_t i = 0; i < target.dim(); ++i)
            target[i] = c[0] * g_toric[i] + c[1] * zb[i] + c[2] * za[i] + c[3] * zab[i];
        CHECK(target.norm() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(fidelity(got, target) == doctest::Approx(1.0).epsilon(1e-10));
    }
}
