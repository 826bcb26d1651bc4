// statevec.hpp -- dense statevector simulation for desk-scale verification.
//
// Bit convention (used everywhere in this project): basis bit q_1 is the
// most significant bit of the amplitude index, i.e. bit of qubit k in index
// idx is (idx >> (n-k)) & 1. Pauli application is phase-free Z-then-X per
// qubit, consistent with the symplectic representation.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "toricgraph/circuit.hpp"
#include "toricgraph/pauli.hpp"

namespace toricgraph {

using cplx = std::complex<double>;

class StateVec {
  public:
    StateVec() = default;

    // |0...0> on n qubits.
    explicit StateVec(std::size_t n) : n_(n), amps_(std::size_t(1) << n, cplx(0)) {
        if (n > 24) throw std::invalid_argument("StateVec: qubit count too large for dense simulation");
        amps_[0] = 1.0;
    }

    static StateVec basis(std::size_t n, std::size_t index) {
        StateVec s(n);
        s.amps_[0] = 0.0;
        s.amps_.at(index) = 1.0;
        return s;
    }

    std::size_t n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<cplx> &amps() const { return amps_; }
    cplx &operator[](std::size_t i) { return amps_[i]; }
    const cplx &operator[](std::size_t i) const { return amps_[i]; }

    std::size_t bit_mask(std::size_t q) const {
        if (q < 1 || q > n_) throw std::out_of_range("StateVec: qubit out of range");
        return std::size_t(1) << (n_ - q);
    }

    double norm() const {
        double s = 0;
        for (const cplx &a : amps_) s += std::norm(a);
        return std::sqrt(s);
    }

    void normalize() {
        const double nrm = norm();
        if (nrm == 0) throw std::domain_error("StateVec: cannot normalize zero vector");
        for (cplx &a : amps_) a /= nrm;
    }

    void apply_h(std::size_t q) {
        const std::size_t m = bit_mask(q);
        const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if (!(i & m)) {
                const cplx a = amps_[i], b = amps_[i | m];
                amps_[i] = (a + b) * inv_sqrt2;
                amps_[i | m] = (a - b) * inv_sqrt2;
            }
    }

    void apply_x(std::size_t q) {
        const std::size_t m = bit_mask(q);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
    }

    void apply_z(std::size_t q) {
        const std::size_t m = bit_mask(q);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if (i & m) amps_[i] = -amps_[i];
    }

    void apply_cx(std::size_t c, std::size_t t) {
        const std::size_t mc = bit_mask(c), mt = bit_mask(t);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
    }

    void apply_cz(std::size_t a, std::size_t b) {
        const std::size_t ma = bit_mask(a), mb = bit_mask(b);
        for (std::size_t i = 0; i < amps_.size(); ++i)
            if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
    }

    void apply_gate(const Gate &g) {
        switch (g.kind) {
            case GateKind::H: apply_h(g.q1); break;
            case GateKind::X: apply_x(g.q1); break;
            case GateKind::Z: apply_z(g.q1); break;
            case GateKind::CX: apply_cx(g.q1, g.q2); break;
            case GateKind::CZ: apply_cz(g.q1, g.q2); break;
        }
    }

    friend cplx inner(const StateVec &a, const StateVec &b) {
        if (a.n_ != b.n_) throw std::invalid_argument("inner: qubit count mismatch");
        cplx s = 0;
        for (std::size_t i = 0; i < a.amps_.size(); ++i) s += std::conj(a.amps_[i]) * b.amps_[i];
        return s;
    }

  private:
    std::size_t n_ = 0;
    std::vector<cplx> amps_;
};

inline StateVec apply_circuit(StateVec s, const Circuit &c) {
    if (c.n_qubits() != s.n_qubits()) throw std::invalid_argument("apply_circuit: qubit count mismatch");
    for (const Layer &l : c.layers())
        for (const Gate &g : l) s.apply_gate(g);
    return s;
}

// Phase-free P|psi> with P = Z^z X^x applied X-first per qubit:
// |q> -> (-1)^{z.(q xor x)} |q xor x>.
inline StateVec apply_pauli(const StateVec &s, const PauliOp &p) {
    if (p.n_qubits != s.n_qubits()) throw std::invalid_argument("apply_pauli: qubit count mismatch");
    const std::size_t n = s.n_qubits();
    std::size_t xmask = 0, zmask = 0;
    for (std::size_t q = 1; q <= n; ++q) {
        if (p.x.get(q)) xmask |= s.bit_mask(q);
        if (p.z.get(q)) zmask |= s.bit_mask(q);
    }
    StateVec out = s;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const std::size_t j = i ^ xmask;
        const bool sign = __builtin_parityll(static_cast<unsigned long long>(j & zmask));
        out[j] = sign ? -s[i] : s[i];
    }
    return out;
}

inline cplx pauli_matrix_element(const StateVec &a, const PauliOp &p, const StateVec &b) {
    return inner(a, apply_pauli(b, p));
}

inline cplx pauli_expectation(const StateVec &s, const PauliOp &p) {
    return pauli_matrix_element(s, p, s);
}

// Fidelity |<a|b>|^2; global-phase insensitive by construction.
inline double fidelity(const StateVec &a, const StateVec &b) {
    return std::norm(inner(a, b));
}

}  // namespace toricgraph
