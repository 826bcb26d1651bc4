// verify.hpp -- stabilizer expectations, entanglement entropy, the
// brute-force Knill-Laflamme distance checker, and the projector-built
// toric code reference state.

#pragma once

#include <Eigen/Dense>
#include <optional>

#include "toricgraph/lattice.hpp"
#include "toricgraph/statevec.hpp"

namespace toricgraph {

// Enumerates all non-identity Paulis of weight <= max_weight on n qubits in
// increasing weight order. Visits sum_{w<=max} C(n,w) 3^w operators.
class PauliErrorIter {
  public:
    PauliErrorIter(std::size_t n_qubits, std::size_t max_weight)
        : n_(n_qubits), max_w_(std::min(max_weight, n_qubits)) {}

    template <typename F>
    void for_each(F &&visit) const {
        for (std::size_t w = 1; w <= max_w_; ++w) for_each_of_weight(w, visit);
    }

    template <typename F>
    void for_each_of_weight(std::size_t w, F &&visit) const {
        if (w < 1 || w > n_) return;
        std::vector<std::size_t> support(w, 0);
        combos(1, 0, w, support, visit);
    }

    static std::size_t count(std::size_t n, std::size_t max_weight) {
        // sum_{w=1..max} C(n,w) 3^w, exact in double-free integer arithmetic
        std::size_t total = 0;
        for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
            std::size_t binom = 1;
            for (std::size_t k = 1; k <= w; ++k) binom = binom * (n - k + 1) / k;
            std::size_t pw = 1;
            for (std::size_t k = 0; k < w; ++k) pw *= 3;
            total += binom * pw;
        }
        return total;
    }

  private:
    template <typename F>
    void combos(std::size_t start, std::size_t depth, std::size_t w,
                std::vector<std::size_t> &support, F &&visit) const {
        if (depth == w) {
            assign_letters(support, 0, PauliOp(n_), visit);
            return;
        }
        for (std::size_t q = start; q + (w - depth - 1) <= n_; ++q) {
            support[depth] = q;
            combos(q + 1, depth + 1, w, support, visit);
        }
    }

    template <typename F>
    void assign_letters(const std::vector<std::size_t> &support, std::size_t pos, PauliOp p,
                        F &&visit) const {
        if (pos == support.size()) {
            visit(p);
            return;
        }
        const std::size_t q = support[pos];
        for (int letter = 0; letter < 3; ++letter) {
            PauliOp next = p;
            if (letter == 0) next.x.set(q, true);                        // X
            if (letter == 1) { next.z.set(q, true); next.x.set(q, true); }  // Y
            if (letter == 2) next.z.set(q, true);                        // Z
            assign_letters(support, pos + 1, std::move(next), visit);
        }
    }

    std::size_t n_, max_w_;
};

struct KlResult {
    std::size_t distance = 0;            // d_max+1 when no violation found
    bool exhausted = false;              // true when nothing violated up to d_max
    std::optional<PauliOp> witness;      // the violating operator, if any
    int violated_condition = 0;          // 1: expectations differ, 2: cross element nonzero
};

// Smallest weight w <= d_max at which some Pauli violates the two-codeword
// Knill-Laflamme conditions <1|O|1> = <2|O|2> and <1|O|2> = 0; enumeration
// is in increasing weight with early exit.
inline KlResult kl_distance_full(const std::vector<StateVec> &codewords, std::size_t d_max,
                                 double tol = 1e-10) {
    if (codewords.size() != 2) throw std::invalid_argument("kl_distance: need exactly 2 codewords");
    const StateVec &a = codewords[0], &b = codewords[1];
    if (std::abs(a.norm() - 1.0) > tol || std::abs(b.norm() - 1.0) > tol ||
        std::abs(inner(a, b)) > tol)
        throw std::invalid_argument("kl_distance: codewords must be orthonormal");

    KlResult res;
    PauliErrorIter it(a.n_qubits(), d_max);
    for (std::size_t w = 1; w <= d_max; ++w) {
        bool found = false;
        it.for_each_of_weight(w, [&](const PauliOp &p) {
            if (found) return;
            const cplx e1 = pauli_expectation(a, p);
            const cplx e2 = pauli_expectation(b, p);
            if (std::abs(e1 - e2) > tol) {
                res = {w, false, p, 1};
                found = true;
                return;
            }
            if (std::abs(pauli_matrix_element(a, p, b)) > tol) {
                res = {w, false, p, 2};
                found = true;
            }
        });
        if (found) return res;
    }
    res.distance = d_max + 1;
    res.exhausted = true;
    return res;
}

inline std::size_t kl_distance(const std::vector<StateVec> &codewords, std::size_t d_max,
                               double tol = 1e-10) {
    return kl_distance_full(codewords, d_max, tol).distance;
}

// Von Neumann entropy (base 2) of the reduced state on `subset`.
inline double entanglement_entropy(const StateVec &s, const std::vector<std::size_t> &subset) {
    const std::size_t n = s.n_qubits();
    if (subset.empty() || subset.size() >= n)
        throw std::invalid_argument("entanglement_entropy: subset must be proper and nonempty");
    std::vector<bool> in_a(n + 1, false);
    for (std::size_t q : subset) {
        if (q < 1 || q > n) throw std::out_of_range("entanglement_entropy: qubit out of range");
        if (in_a[q]) throw std::invalid_argument("entanglement_entropy: duplicate qubit");
        in_a[q] = true;
    }
    const std::size_t na = subset.size(), nb = n - na;
    const std::size_t da = std::size_t(1) << na, db = std::size_t(1) << nb;

    // reshape |psi> into the da x db matrix M; entropy from eigenvalues of M M^dag
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(da),
                                                static_cast<Eigen::Index>(db));
    for (std::size_t idx = 0; idx < s.dim(); ++idx) {
        std::size_t ia = 0, ib = 0;
        for (std::size_t q = 1; q <= n; ++q) {
            const bool bit = idx & (std::size_t(1) << (n - q));
            if (in_a[q])
                ia = (ia << 1) | bit;
            else
                ib = (ib << 1) | bit;
        }
        m(static_cast<Eigen::Index>(ia), static_cast<Eigen::Index>(ib)) = s[idx];
    }
    Eigen::MatrixXcd rho = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    double entropy = 0;
    for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
        const double lam = es.eigenvalues()[k];
        if (lam > 1e-14) entropy -= lam * std::log2(lam);
    }
    return entropy;
}

// Projects |0...0> onto the joint +1 eigenspace of all stars, plaquettes and
// both strings by applying (I+S)/2 per generator, then normalizes. This is
// the independent oracle for the toric code state; feasible for L = 2 and
// (behind the caller's own patience) L = 3.
inline StateVec toric_code_reference(const LatticeParams &p) {
    if (p.n_qubits() > 20) throw std::invalid_argument("toric_code_reference: lattice too large");
    std::vector<PauliOp> gens;
    for (std::size_t j = 1; j <= p.L; ++j)
        for (std::size_t i = 1; i <= p.L; ++i) {
            gens.push_back(build_star(i, j, p));
            gens.push_back(build_plaquette(i, j, p));
        }
    auto [s_alpha, s_beta] = string_operators(p);
    gens.push_back(s_alpha);
    gens.push_back(s_beta);

    StateVec s(p.n_qubits());
    for (const PauliOp &g : gens) {
        StateVec projected = apply_pauli(s, g);
        for (std::size_t i = 0; i < s.dim(); ++i) s[i] = 0.5 * (s[i] + projected[i]);
    }
    s.normalize();
    return s;
}

}  // namespace toricgraph
