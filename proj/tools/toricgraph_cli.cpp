// toricgraph_cli.cpp -- command-line front end: graph construction and
// export, circuit synthesis, and verification runs with machine-readable
// reports.
//
// Exit codes: 0 success / all checks passed, 1 verification failure,
// 2 usage error. Output directory: --out flag, else $TORICGRAPH_OUT,
// else the current directory.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "toricgraph/export.hpp"
#include "toricgraph/synth.hpp"
#include "toricgraph/verify.hpp"

using namespace toricgraph;
namespace fs = std::filesystem;

namespace {

constexpr double kTol = 1e-10;
constexpr std::size_t kSimQubitCap = 20;

fs::path output_dir(const std::string &flag) {
    if (!flag.empty()) return flag;
    if (const char *env = std::getenv("TORICGRAPH_OUT")) return env;
    return ".";
}

void write_file(const fs::path &path, const std::string &content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << content;
    if (!os) throw std::runtime_error("write failed: " + path.string());
    std::cout << "wrote " << path.string() << "\n";
}

int cmd_graph(std::size_t L, const std::string &format, const std::string &out_flag) {
    const LatticeParams p(L);
    const Adjacency a = closed_form_adjacency(p);
    const ToricDecomposition d = decompose_adjacency(a, p);
    const fs::path dir = output_dir(out_flag);
    const std::string tag = "_L" + std::to_string(L);

    if (format == "json") {
        write_file(dir / ("graph" + tag + ".json"), a.to_json().dump(2) + "\n");
        const nlohmann::json layers{{"mstar", d.mstar.to_json()},
                                    {"mhalf1", d.mhalf1.to_json()},
                                    {"mhalf2", d.mhalf2.to_json()}};
        write_file(dir / ("decomposition" + tag + ".json"), layers.dump(2) + "\n");
    } else {
        write_file(dir / ("graph" + tag + ".dot"), graph_to_dot(a, "toric"));
        write_file(dir / ("decomposition" + tag + ".dot"), decomposition_to_dot(d));
    }
    std::cout << "L=" << L << ": " << a.n() << " vertices, " << a.num_edges() << " edges ("
              << d.mstar.num_edges() << " star + " << d.mhalf1.num_edges() << " + "
              << d.mhalf2.num_edges() << " half)\n";
    return 0;
}

int cmd_circuit(const std::string &kind, std::size_t size, const std::string &format,
                const std::string &out_flag) {
    Circuit c;
    if (kind == "star")
        c = synth_star(size);
    else if (kind == "half")
        c = synth_half(size);
    else if (kind == "toric")
        c = synth_toric(LatticeParams(size));
    else
        c = synth_encoder(LatticeParams(size));

    const fs::path dir = output_dir(out_flag);
    const std::string name = "circuit_" + kind + "_" + std::to_string(size);
    if (format == "json")
        write_file(dir / (name + ".json"), c.to_json().dump(2) + "\n");
    else
        write_file(dir / (name + ".qasm"), c.to_qasm_text());

    const DepthReport r = c.depth_report();
    std::cout << "qubits " << c.n_qubits() << ", depth " << r.total << " (" << r.non_h
              << " non-H), gates: " << r.h_gates << " H, " << r.cx_gates << " CX, " << r.cz_gates
              << " CZ\n";
    return 0;
}

struct VerifyContext {
    std::size_t L = 2;
    std::size_t m = 3;
    unsigned seed = 1;
    int corrupt_bit = -1;  // test hook: flip one adjacency bit before checking
    nlohmann::json report = nlohmann::json::array();
    bool all_passed = true;

    void add(const std::string &check, bool ok, const std::string &witness = "") {
        report.push_back(report_entry(check, ok, witness));
        if (!ok) all_passed = false;
        std::cout << (ok ? "PASS" : "FAIL") << "  " << check
                  << (witness.empty() ? "" : "  [" + witness + "]") << "\n";
    }
};

void verify_pipeline(VerifyContext &ctx) {
    const LatticeParams p(ctx.L);
    const auto [a, trace] = reduce_to_graph(p);
    Adjacency closed = closed_form_adjacency(p);
    if (ctx.corrupt_bit >= 0) {
        BitMat m = closed.matrix();
        const std::size_t u = static_cast<std::size_t>(ctx.corrupt_bit) % closed.n() + 1;
        const std::size_t v = u % closed.n() + 1;
        m.set(u, v, !m.get(u, v));
        m.set(v, u, !m.get(v, u));
        closed = Adjacency(m);
    }
    ctx.add("pipeline_equals_closed_form", a == closed);
    ctx.add("edge_count_formula", closed.num_edges() == (ctx.L - 1) * ctx.L * (ctx.L + 2),
            std::to_string(closed.num_edges()) + " edges");
    try {
        decompose_adjacency(closed, p);
        ctx.add("decomposition_recomposes", true);
    } catch (const PipelineError &e) {
        ctx.add("decomposition_recomposes", false, e.what());
    }
}

void verify_state(VerifyContext &ctx) {
    const LatticeParams p(ctx.L);
    if (p.n_qubits() > kSimQubitCap) throw CLI::ValidationError("state scope needs 2L^2 <= 20");
    Adjacency a = closed_form_adjacency(p);
    const Adjacency *override_ptr = nullptr;
    Adjacency corrupted;
    if (ctx.corrupt_bit >= 0) {
        BitMat m = a.matrix();
        const std::size_t u = static_cast<std::size_t>(ctx.corrupt_bit) % a.n() + 1;
        const std::size_t v = u % a.n() + 1;
        m.set(u, v, !m.get(u, v));
        m.set(v, u, !m.get(v, u));
        corrupted = Adjacency(m);
        override_ptr = &corrupted;
    }
    const EquivalenceReport rep = verify_standard_form_equivalence(p, override_ptr);
    ctx.add("stabilizer_expectations_plus_one", [&] {
        for (const auto &[name, v] : rep.expectations)
            if (std::abs(v - 1.0) > kTol) return false;
        return true;
    }(), rep.passed(kTol) ? "" : rep.first_failure(kTol));
    ctx.add("fidelity_with_projector_reference", rep.fidelity_with_reference >= 1.0 - kTol);
    ctx.add("entropies_match", [&] {
        for (const auto &[cut, e1, e2] : rep.entropies)
            if (std::abs(e1 - e2) > kTol) return false;
        return true;
    }());

    const StateVec got = apply_circuit(StateVec(p.n_qubits()), synth_toric(p));
    const StateVec oracle = graph_state_vector(a);
    ctx.add("synthesized_circuit_matches_oracle", fidelity(got, oracle) >= 1.0 - kTol);
}

StateVec tensor(const StateVec &a, const StateVec &b) {
    StateVec out(a.n_qubits() + b.n_qubits());
    out[0] = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

void verify_distance(VerifyContext &ctx) {
    const std::size_t m = ctx.m;
    if (m * m > kSimQubitCap) throw CLI::ValidationError("distance scope needs m^2 <= 20");
    ctx.add("single_pair_distance_1",
            kl_distance({ghz_reference(m, +1), ghz_reference(m, -1)}, m) == 1);
    StateVec plus = ghz_reference(m, +1), minus = ghz_reference(m, -1);
    for (std::size_t k = 1; k < m; ++k) {
        plus = tensor(plus, ghz_reference(m, +1));
        minus = tensor(minus, ghz_reference(m, -1));
    }
    const std::size_t d = kl_distance({plus, minus}, m);
    ctx.add("m_copy_distance_m", d == m, "distance " + std::to_string(d));
}

void verify_encode(VerifyContext &ctx) {
    const LatticeParams p(ctx.L);
    if (p.n_qubits() > kSimQubitCap) throw CLI::ValidationError("encode scope needs 2L^2 <= 20");
    const StateVec g_toric = graph_state_vector(closed_form_adjacency(p));
    const StateVec za = apply_pauli(g_toric, logical_z_alpha(p));
    const StateVec zb = apply_pauli(g_toric, logical_z_beta(p));
    const StateVec zab = apply_pauli(za, logical_z_beta(p));
    const std::size_t data_alpha = qubit_index({p.L, 1, Dir::X}, p);
    const std::size_t data_beta = qubit_index({1, 1, Dir::Y}, p);
    const Circuit enc = synth_encoder(p);

    std::mt19937 rng(ctx.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 20 && ok; ++trial) {
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
        const StateVec got = apply_circuit(std::move(in), enc);
        StateVec target(p.n_qubits());
        target[0] = 0;
        for (std::size_t i = 0; i < target.dim(); ++i)
            target[i] = c[0] * g_toric[i] + c[1] * zb[i] + c[2] * za[i] + c[3] * zab[i];
        ok = fidelity(got, target) >= 1.0 - kTol;
    }
    ctx.add("encoder_random_superpositions", ok);
}

int cmd_verify(const std::string &scope, VerifyContext &ctx, const std::string &out_flag) {
    if (scope == "pipeline" || scope == "all") verify_pipeline(ctx);
    if (scope == "state" || scope == "all") verify_state(ctx);
    if (scope == "distance" || scope == "all") verify_distance(ctx);
    if (scope == "encode" || scope == "all") verify_encode(ctx);

    const fs::path dir = output_dir(out_flag);
    write_file(dir / ("verify_" + scope + "_report.json"), ctx.report.dump(2) + "\n");
    return ctx.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"toric graph state toolkit"};
    app.require_subcommand(1);
    std::string out_flag;
    app.add_option("--out", out_flag, "output directory (default: $TORICGRAPH_OUT or .)");

    std::size_t L = 2;
    std::string graph_format = "json";
    auto *graph = app.add_subcommand("graph", "export the toric graph and its decomposition");
    graph->add_option("--L", L, "lattice side")->required()->check(CLI::Range(std::size_t(2), std::size_t(256)));
    graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}));

    std::string kind;
    std::size_t m = 0, n = 0, circuit_L = 0;
    std::string circuit_format = "json";
    auto *circuit = app.add_subcommand("circuit", "synthesize a preparation circuit");
    circuit->add_option("kind", kind)->required()->check(
        CLI::IsMember({"star", "half", "toric", "encoder"}));
    circuit->add_option("--m", m, "star size");
    circuit->add_option("--n", n, "half-graph side");
    circuit->add_option("--L", circuit_L, "lattice side");
    circuit->add_option("--format", circuit_format)->check(CLI::IsMember({"json", "qasm-text"}));

    std::string scope = "all";
    VerifyContext ctx;
    auto *verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--scope", scope)
        ->check(CLI::IsMember({"pipeline", "state", "distance", "encode", "all"}));
    verify->add_option("--L", ctx.L, "lattice side")->check(CLI::Range(std::size_t(2), std::size_t(64)));
    verify->add_option("--m", ctx.m, "GHZ copy count for distance checks")
        ->check(CLI::Range(std::size_t(2), std::size_t(4)));
    verify->add_option("--seed", ctx.seed, "seed for random encoder coefficients");
    verify->add_option("--corrupt-bit", ctx.corrupt_bit,
                       "test hook: flip one adjacency bit (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (graph->parsed()) return cmd_graph(L, graph_format, out_flag);
        if (circuit->parsed()) {
            std::size_t size = 0;
            if (kind == "star") size = m;
            if (kind == "half") size = n;
            if (kind == "toric" || kind == "encoder") size = circuit_L;
            if (size == 0) {
                std::cerr << "missing size option for circuit kind '" << kind << "'\n";
                return 2;
            }
            if (kind == "star" && size < 2) {
                std::cerr << "star circuits need --m >= 2\n";
                return 2;
            }
            if ((kind == "toric" || kind == "encoder") && size < 2) {
                std::cerr << "lattice circuits need --L >= 2\n";
                return 2;
            }
            return cmd_circuit(kind, size, circuit_format, out_flag);
        }
        return cmd_verify(scope, ctx, out_flag);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
