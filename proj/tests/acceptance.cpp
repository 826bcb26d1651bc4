// acceptance.cpp -- end-to-end acceptance gate. Runs every top-level claim
// at its stated tolerance and prints one PASS/FAIL line per criterion.
// The slow 16-qubit distance check runs only with --slow or
// TORICGRAPH_SLOW_TESTS=1.

#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>

#include "toricgraph/export.hpp"
#include "toricgraph/synth.hpp"
#include "toricgraph/verify.hpp"

using namespace toricgraph;

namespace {

constexpr double kTol = 1e-10;

bool states_match(const StateVec &got, const StateVec &expect) {
    if (got.n_qubits() != expect.n_qubits()) return false;
    for (std::size_t i = 0; i < got.dim(); ++i)
        if (std::abs(got[i] - expect[i]) > kTol) return false;
    return true;
}

StateVec tensor(const StateVec &a, const StateVec &b) {
    StateVec out(a.n_qubits() + b.n_qubits());
    out[0] = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

StateVec copies(const StateVec &s, std::size_t m) {
    StateVec out = s;
    for (std::size_t k = 1; k < m; ++k) out = tensor(out, s);
    return out;
}

bool criterion_pipeline_closed_form() {
    for (std::size_t L = 2; L <= 8; ++L) {
        const LatticeParams p(L);
        const auto [a, trace] = reduce_to_graph(p);
        if (a != closed_form_adjacency(p)) return false;
    }
    return true;
}

bool criterion_decomposition() {
    for (std::size_t L = 2; L <= 8; ++L) {
        const LatticeParams p(L);
        const Adjacency a = closed_form_adjacency(p);
        ToricDecomposition d;
        try {
            d = decompose_adjacency(a, p);  // checks disjointness + recomposition
        } catch (const PipelineError &) {
            return false;
        }
        if (a.num_edges() != (L - 1) * L * (L + 2)) return false;
        if (d.mstar.num_edges() != 2 * L * (L - 1)) return false;
        if (d.mhalf1.num_edges() != L * L * (L - 1) / 2) return false;
        if (d.mhalf2.num_edges() != L * L * (L - 1) / 2) return false;
        // 2L star components of L vertices, centers (L,j,x) and (1,j,y)
        for (std::size_t j = 1; j <= L; ++j) {
            if (d.mstar.degree(qubit_index({p.L, j, Dir::X}, p)) != L - 1) return false;
            if (d.mstar.degree(qubit_index({1, j, Dir::Y}, p)) != L - 1) return false;
        }
        // L half components per layer: (u,jx,x) -- (w+1,j,y) iff u <= w
        for (std::size_t j = 1; j <= L; ++j)
            for (std::size_t u = 1; u + 1 <= L; ++u)
                for (std::size_t w = 1; w + 1 <= L; ++w) {
                    const std::size_t yq = qubit_index({w + 1, j, Dir::Y}, p);
                    if (d.mhalf1.edge(qubit_index({u, j, Dir::X}, p), yq) != (u <= w))
                        return false;
                    const std::size_t jx = p.wrap(static_cast<long long>(j) + 1);
                    if (d.mhalf2.edge(qubit_index({u, jx, Dir::X}, p), yq) != (u <= w))
                        return false;
                }
    }
    return true;
}

bool criterion_lc_equivalence() {
    const EquivalenceReport rep = verify_standard_form_equivalence(LatticeParams(2));
    if (!rep.adjacency_match || rep.expectations.size() != 10) return false;
    for (const auto &[name, v] : rep.expectations)
        if (std::abs(v - 1.0) > kTol) return false;
    return rep.fidelity_with_reference >= 1.0 - kTol;
}

bool criterion_circuit_oracle() {
    for (std::size_t m = 2; m <= 10; ++m)
        if (!states_match(apply_circuit(StateVec(m), synth_star(m)),
                          graph_state_vector(star_graph(m, m))))
            return false;
    for (std::size_t n = 1; n <= 5; ++n)
        if (!states_match(apply_circuit(StateVec(2 * n), synth_half(n)),
                          graph_state_vector(half_graph(n))))
            return false;
    const LatticeParams p(2);
    return states_match(apply_circuit(StateVec(p.n_qubits()), synth_toric(p)),
                        graph_state_vector(closed_form_adjacency(p)));
}

bool criterion_depth_bounds() {
    for (std::size_t m = 2; m <= 64; ++m)
        if (synth_star(m).non_h_depth() != 2 * ceil_log2(m - 1) + 1) return false;
    for (std::size_t n = 1; n <= 64; ++n)
        if (synth_half(n).non_h_depth() > 3 * ceil_log2(n) + 2) return false;
    for (std::size_t L = 2; L <= 64; ++L) {
        const LatticeParams p(L);
        const std::size_t bound =
            star_phase_circuit(L).non_h_depth() + 2 * half_phase_circuit(L - 1).non_h_depth();
        if (synth_toric(p).non_h_depth() > bound) return false;
    }
    return true;
}

bool criterion_code_distance(bool slow) {
    for (std::size_t m = 2; m <= 4; ++m)
        if (kl_distance({ghz_reference(m, +1), ghz_reference(m, -1)}, m) != 1) return false;
    for (std::size_t m = 2; m <= 3; ++m)
        if (kl_distance({copies(ghz_reference(m, +1), m), copies(ghz_reference(m, -1), m)}, m) !=
            m)
            return false;
    if (slow) {
        const std::size_t m = 4;
        if (kl_distance({copies(ghz_reference(m, +1), m), copies(ghz_reference(m, -1), m)}, m) !=
            m)
            return false;
    }
    return true;
}

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
            double prod = 1.0;
            for (std::size_t j = 1; j <= p.L; ++j)
                for (Dir d : {Dir::X, Dir::Y}) {
                    const auto map = detail::star_component_map(j, d, p);
                    std::vector<int> q;
                    for (std::size_t local = 0; local < p.L; ++local)
                        q.push_back(static_cast<int>((idx >> (p.n_qubits() - map[local])) & 1));
                    prod *= star_component_amp(p.L, q,
                                               d == Dir::X ? (k & 2) != 0 : (k & 1) != 0);
                }
            amp += c[k] * prod;
        }
        out[idx] = amp;
    }
    return out;
}

bool criterion_encoder() {
    const LatticeParams p(2);
    const StateVec g_toric = graph_state_vector(closed_form_adjacency(p));
    const StateVec za = apply_pauli(g_toric, logical_z_alpha(p));
    const StateVec zb = apply_pauli(g_toric, logical_z_beta(p));
    const StateVec zab = apply_pauli(za, logical_z_beta(p));
    const std::size_t data_alpha = qubit_index({p.L, 1, Dir::X}, p);
    const std::size_t data_beta = qubit_index({1, 1, Dir::Y}, p);
    const EncoderStages stages = synth_encoder_stages(p);

    std::mt19937 rng(20240817);
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

        StateVec mid = apply_circuit(apply_circuit(in, stages.ghz), stages.mstar);
        if (fidelity(mid, repetition_reference(p, c)) < 1.0 - kTol) return false;

        const StateVec got = apply_circuit(mid, stages.mhalf);
        StateVec target(p.n_qubits());
        target[0] = 0;
        for (std::size_t i = 0; i < target.dim(); ++i)
            target[i] = c[0] * g_toric[i] + c[1] * zb[i] + c[2] * za[i] + c[3] * zab[i];
        if (fidelity(got, target) < 1.0 - kTol) return false;
    }
    return true;
}

bool criterion_ghz_local_equivalence() {
    for (std::size_t m = 2; m <= 8; ++m) {
        StateVec s = graph_state_vector(star_graph(m, m));
        s.apply_h(m);
        StateVec cat = ghz_reference(m, +1);
        for (std::size_t q = 1; q <= m; ++q) cat.apply_h(q);
        if (!states_match(s, cat)) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char **argv) {
    bool slow = std::getenv("TORICGRAPH_SLOW_TESTS") != nullptr;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;

    const std::pair<const char *, std::function<bool()>> criteria[] = {
        {"pipeline adjacency equals closed form (L=2..8)", criterion_pipeline_closed_form},
        {"decomposition structure and edge count (L=2..8)", criterion_decomposition},
        {"graph state is locally equivalent to the toric code (L=2)",
         criterion_lc_equivalence},
        {"synthesized circuits match oracle amplitudes", criterion_circuit_oracle},
        {"log-depth bounds (star/half/toric up to 64)", criterion_depth_bounds},
        {"code distances via Knill-Laflamme search", [&] { return criterion_code_distance(slow); }},
        {"encoder prepares the logical superposition (L=2)", criterion_encoder},
        {"H on star center gives the GHZ superposition (m=2..8)",
         criterion_ghz_local_equivalence},
    };

    int failures = 0;
    for (const auto &[name, fn] : criteria) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception &e) {
            std::cout << "FAIL  " << name << "  (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    }
    if (!slow) std::cout << "note: 16-qubit distance check skipped (enable with --slow)\n";
    return failures == 0 ? 0 : 1;
}
