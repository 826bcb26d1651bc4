// pauli.hpp -- Pauli operators and stabilizer generating sets in the
// binary symplectic picture.
//
// A Pauli on n qubits is stored as (z|x) with sigma = Z^z X^x per qubit:
// I -> (0|0), X -> (0|1), Z -> (1|0), Y -> (1|1). Overall phases are not
// tracked; state-level verification happens downstream via statevectors.

#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "toricgraph/gf2.hpp"

namespace toricgraph {

struct PauliOp {
    std::size_t n_qubits = 0;
    BitVec z;  // Z support
    BitVec x;  // X support

    PauliOp() = default;
    explicit PauliOp(std::size_t n) : n_qubits(n), z(n), x(n) {}
    PauliOp(BitVec z_part, BitVec x_part)
        : n_qubits(z_part.size()), z(std::move(z_part)), x(std::move(x_part)) {
        if (z.size() != x.size()) throw std::invalid_argument("PauliOp: z/x size mismatch");
    }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::size_t q = 1; q <= n_qubits; ++q)
            if (z.get(q) || x.get(q)) ++w;
        return w;
    }

    bool is_identity() const { return z.is_zero() && x.is_zero(); }

    bool operator==(const PauliOp &o) const { return z == o.z && x == o.x; }
    bool operator!=(const PauliOp &o) const { return !(*this == o); }

    PauliOp &operator^=(const PauliOp &o) {
        z ^= o.z;
        x ^= o.x;
        return *this;
    }
    friend PauliOp operator^(PauliOp a, const PauliOp &b) { return a ^= b; }

    char letter(std::size_t q) const {
        const bool u = z.get(q), v = x.get(q);
        if (u && v) return 'Y';
        if (u) return 'Z';
        if (v) return 'X';
        return 'I';
    }

    std::string label() const {
        std::string s;
        s.reserve(n_qubits);
        for (std::size_t q = 1; q <= n_qubits; ++q) s.push_back(letter(q));
        return s;
    }
};

// One I/X/Y/Z letter per qubit, leftmost letter = qubit 1.
inline PauliOp pauli_encode(const std::string &label) {
    PauliOp p(label.size());
    for (std::size_t q = 1; q <= label.size(); ++q) {
        switch (std::toupper(static_cast<unsigned char>(label[q - 1]))) {
            case 'I': break;
            case 'X': p.x.set(q, true); break;
            case 'Z': p.z.set(q, true); break;
            case 'Y':
                p.z.set(q, true);
                p.x.set(q, true);
                break;
            default:
                throw std::invalid_argument("pauli_encode: invalid letter in \"" + label + "\"");
        }
    }
    return p;
}

// a^T J b mod 2 with J the off-diagonal identity metric; 0 iff a and b commute.
inline bool symplectic_product(const PauliOp &a, const PauliOp &b) {
    if (a.n_qubits != b.n_qubits)
        throw std::invalid_argument("symplectic_product: size mismatch");
    return a.z.dot(b.x) ^ a.x.dot(b.z);
}

// Ordered generating set; generators are the columns of the 2N x M matrix.
struct Tableau {
    std::size_t n_qubits = 0;
    std::vector<PauliOp> generators;

    Tableau() = default;
    explicit Tableau(std::size_t n) : n_qubits(n) {}

    std::size_t size() const { return generators.size(); }

    void push(PauliOp p) {
        if (p.n_qubits != n_qubits) throw std::invalid_argument("Tableau: qubit count mismatch");
        generators.push_back(std::move(p));
    }

    bool mutually_commuting() const {
        for (std::size_t a = 0; a < generators.size(); ++a)
            for (std::size_t b = a + 1; b < generators.size(); ++b)
                if (symplectic_product(generators[a], generators[b])) return false;
        return true;
    }

    // z-block and x-block as n_qubits x M matrices (rows = qubits, cols = generators).
    BitMat z_block() const { return block(true); }
    BitMat x_block() const { return block(false); }

    // Standard (graph) form: x-block = identity, z-block symmetric with zero diagonal.
    bool is_graph_form() const {
        if (generators.size() != n_qubits) return false;
        if (x_block() != BitMat::identity(n_qubits)) return false;
        const BitMat a = z_block();
        if (a != a.transpose()) return false;
        for (std::size_t q = 1; q <= n_qubits; ++q)
            if (a.get(q, q)) return false;
        return true;
    }

    // 2N x M character grid, z rows on top of x rows.
    std::string to_string() const {
        std::string s;
        const BitMat zb = z_block(), xb = x_block();
        for (std::size_t q = 1; q <= n_qubits; ++q) s += zb.row(q).to_string() + "\n";
        for (std::size_t q = 1; q <= n_qubits; ++q) s += xb.row(q).to_string() + "\n";
        return s;
    }

  private:
    BitMat block(bool z_part) const {
        BitMat m(n_qubits, generators.size());
        for (std::size_t c = 0; c < generators.size(); ++c) {
            const BitVec &v = z_part ? generators[c].z : generators[c].x;
            for (std::size_t q = 1; q <= n_qubits; ++q)
                if (v.get(q)) m.set(q, c + 1, true);
        }
        return m;
    }
};

// Conjugation by Hadamards on a subset of qubits: swaps the z and x entries
// on those rows for every generator. Involutive; preserves all pairwise
// symplectic products.
inline Tableau hadamard_conjugate(const Tableau &t, const std::vector<std::size_t> &subset) {
    for (std::size_t q : subset)
        if (q < 1 || q > t.n_qubits) throw std::out_of_range("hadamard_conjugate: qubit out of range");
    Tableau out = t;
    for (PauliOp &g : out.generators)
        for (std::size_t q : subset) {
            const bool u = g.z.get(q), v = g.x.get(q);
            g.z.set(q, v);
            g.x.set(q, u);
        }
    return out;
}

// Basis change S' = S R: new generator c is the XOR of the old generators
// selected by column c of r. Requires r invertible so the stabilizer group
// (and hence the stabilized state) is unchanged.
inline Tableau right_multiply(const Tableau &t, const BitMat &r) {
    if (r.rows() != t.size() || r.cols() != t.size())
        throw std::invalid_argument("right_multiply: r must be M x M for M generators");
    if (!gf2_invertible(r)) throw std::domain_error("right_multiply: r is singular");
    Tableau out(t.n_qubits);
    for (std::size_t c = 1; c <= r.cols(); ++c) {
        PauliOp g(t.n_qubits);
        for (std::size_t k = 1; k <= r.rows(); ++k)
            if (r.get(k, c)) g ^= t.generators[k - 1];
        out.push(std::move(g));
    }
    return out;
}

}  // namespace toricgraph
