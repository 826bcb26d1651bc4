// lattice.hpp -- star, plaquette and string operators of the toric code
// on the periodic L x L lattice.
//
// Qubits live on lattice edges: (i,j,x) horizontal, (i,j,y) vertical, with
// i,j in 1..L. The linear index is n = i + (j-1)L + [d=y] L^2, so x-edges
// occupy 1..L^2 and y-edges L^2+1..2L^2. Periodic coordinate arithmetic is
// 1-based: 0 wraps to L and L+1 wraps to 1.

#pragma once

#include <utility>

#include "toricgraph/pauli.hpp"

namespace toricgraph {

enum class Dir { X, Y };

struct LatticeParams {
    std::size_t L;

    explicit LatticeParams(std::size_t side) : L(side) {
        if (L < 2) throw std::invalid_argument("LatticeParams: L must be >= 2");
    }

    std::size_t n_qubits() const { return 2 * L * L; }

    // 1-based modular wrap of a lattice coordinate.
    std::size_t wrap(long long c) const {
        const long long l = static_cast<long long>(L);
        long long r = ((c - 1) % l + l) % l + 1;
        return static_cast<std::size_t>(r);
    }
};

struct QubitCoord {
    std::size_t i, j;
    Dir d;
};

inline std::size_t qubit_index(const QubitCoord &c, const LatticeParams &p) {
    if (c.i < 1 || c.i > p.L || c.j < 1 || c.j > p.L)
        throw std::out_of_range("qubit_index: coordinate out of range");
    return c.i + (c.j - 1) * p.L + (c.d == Dir::Y ? p.L * p.L : 0);
}

inline QubitCoord qubit_coord(std::size_t n, const LatticeParams &p) {
    if (n < 1 || n > p.n_qubits()) throw std::out_of_range("qubit_coord: index out of range");
    const Dir d = n > p.L * p.L ? Dir::Y : Dir::X;
    const std::size_t r = (n - 1) % (p.L * p.L);
    return {r % p.L + 1, r / p.L + 1, d};
}

// Star operator A_v at vertex (i,j): X on the four surrounding edges
// {(i,j,x), (i-1,j,x), (i,j,y), (i,j-1,y)} with periodic wrap.
inline PauliOp build_star(std::size_t i, std::size_t j, const LatticeParams &p) {
    if (i < 1 || i > p.L || j < 1 || j > p.L)
        throw std::out_of_range("build_star: vertex out of range");
    PauliOp op(p.n_qubits());
    op.x.set(qubit_index({i, j, Dir::X}, p), true);
    op.x.set(qubit_index({p.wrap(static_cast<long long>(i) - 1), j, Dir::X}, p), true);
    op.x.set(qubit_index({i, j, Dir::Y}, p), true);
    op.x.set(qubit_index({i, p.wrap(static_cast<long long>(j) - 1), Dir::Y}, p), true);
    return op;
}

// Plaquette operator B_p at (i,j): Z on
// {(i,j,x), (i,j+1,x), (i,j,y), (i+1,j,y)} with periodic wrap.
inline PauliOp build_plaquette(std::size_t i, std::size_t j, const LatticeParams &p) {
    if (i < 1 || i > p.L || j < 1 || j > p.L)
        throw std::out_of_range("build_plaquette: plaquette out of range");
    PauliOp op(p.n_qubits());
    op.z.set(qubit_index({i, j, Dir::X}, p), true);
    op.z.set(qubit_index({i, p.wrap(static_cast<long long>(j) + 1), Dir::X}, p), true);
    op.z.set(qubit_index({i, j, Dir::Y}, p), true);
    op.z.set(qubit_index({p.wrap(static_cast<long long>(i) + 1), j, Dir::Y}, p), true);
    return op;
}

// The two lattice-encircling strings fixing one state of the degenerate
// space: S_alpha = Z on (l,1,x) for all l, S_beta = X on (l,L,y) for all l.
inline std::pair<PauliOp, PauliOp> string_operators(const LatticeParams &p) {
    PauliOp s_alpha(p.n_qubits()), s_beta(p.n_qubits());
    for (std::size_t l = 1; l <= p.L; ++l) {
        s_alpha.z.set(qubit_index({l, 1, Dir::X}, p), true);
        s_beta.x.set(qubit_index({l, p.L, Dir::Y}, p), true);
    }
    return {s_alpha, s_beta};
}

// Column index of the star/plaquette generator labelled (i,j) within its block.
inline std::size_t generator_column(std::size_t i, std::size_t j, const LatticeParams &p) {
    return i + (j - 1) * p.L;
}

// All 2L^2 generators: the L^2 stars (columns 1..L^2) followed by the L^2
// plaquettes, each block in (i,j) column order.
inline Tableau build_toric_tableau(const LatticeParams &p) {
    Tableau t(p.n_qubits());
    for (std::size_t c = 1; c <= p.L * p.L; ++c) {
        const std::size_t i = (c - 1) % p.L + 1, j = (c - 1) / p.L + 1;
        t.push(build_star(i, j, p));
    }
    for (std::size_t c = 1; c <= p.L * p.L; ++c) {
        const std::size_t i = (c - 1) % p.L + 1, j = (c - 1) / p.L + 1;
        t.push(build_plaquette(i, j, p));
    }
    return t;
}

// ASCII picture of one operator's support on the lattice, for debugging.
inline std::string lattice_pretty(const PauliOp &op, const LatticeParams &p) {
    std::string s;
    for (std::size_t i = 1; i <= p.L; ++i) {
        for (std::size_t j = 1; j <= p.L; ++j) s.push_back(op.letter(qubit_index({i, j, Dir::X}, p)));
        s += "  ";
        for (std::size_t j = 1; j <= p.L; ++j) s.push_back(op.letter(qubit_index({i, j, Dir::Y}, p)));
        s.push_back('\n');
    }
    return s;
}

}  // namespace toricgraph
