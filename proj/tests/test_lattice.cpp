#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toricgraph/lattice.hpp"

using namespace toricgraph;

TEST_CASE("index/coordinate bijection") {
    for (std::size_t L = 2; L <= 5; ++L) {
        const LatticeParams p(L);
        for (std::size_t n = 1; n <= p.n_qubits(); ++n) {
            const QubitCoord c = qubit_coord(n, p);
            CHECK(qubit_index(c, p) == n);
        }
        for (std::size_t i = 1; i <= L; ++i)
            for (std::size_t j = 1; j <= L; ++j)
                for (Dir d : {Dir::X, Dir::Y}) {
                    const std::size_t n = qubit_index({i, j, d}, p);
                    const QubitCoord c = qubit_coord(n, p);
                    CHECK(c.i == i);
                    CHECK(c.j == j);
                    CHECK(c.d == d);
                }
    }
}

TEST_CASE("wrap is 1-based modular") {
    const LatticeParams p(3);
    CHECK(p.wrap(0) == 3);
    CHECK(p.wrap(4) == 1);
    CHECK(p.wrap(3) == 3);
    CHECK(p.wrap(-2) == 1);
    CHECK_THROWS_AS(LatticeParams(1), std::invalid_argument);
}

TEST_CASE("stars and plaquettes have weight four") {
    for (std::size_t L = 2; L <= 4; ++L) {
        const LatticeParams p(L);
        for (std::size_t i = 1; i <= L; ++i)
            for (std::size_t j = 1; j <= L; ++j) {
                const PauliOp a = build_star(i, j, p);
                const PauliOp b = build_plaquette(i, j, p);
                CHECK(a.weight() == 4);
                CHECK(a.z.is_zero());
                CHECK(b.weight() == 4);
                CHECK(b.x.is_zero());
            }
    }
}

TEST_CASE("products of all stars and of all plaquettes are the identity") {
    for (std::size_t L = 2; L <= 5; ++L) {
        const LatticeParams p(L);
        PauliOp star_product(p.n_qubits()), plaq_product(p.n_qubits());
        for (std::size_t i = 1; i <= L; ++i)
            for (std::size_t j = 1; j <= L; ++j) {
                star_product ^= build_star(i, j, p);
                plaq_product ^= build_plaquette(i, j, p);
            }
        CHECK(star_product.is_identity());
        CHECK(plaq_product.is_identity());
    }
}

TEST_CASE("generator blocks have rank L^2 - 1") {
    for (std::size_t L = 2; L <= 4; ++L) {
        const LatticeParams p(L);
        const Tableau t = build_toric_tableau(p);
        BitMat stars(p.n_qubits(), p.L * p.L), plaqs(p.n_qubits(), p.L * p.L);
        for (std::size_t c = 1; c <= p.L * p.L; ++c)
            for (std::size_t q = 1; q <= p.n_qubits(); ++q) {
                stars.set(q, c, t.generators[c - 1].x.get(q));
                plaqs.set(q, c, t.generators[p.L * p.L + c - 1].z.get(q));
            }
        CHECK(gf2_rank(stars) == p.L * p.L - 1);
        CHECK(gf2_rank(plaqs) == p.L * p.L - 1);
    }
}

TEST_CASE("all generators and strings mutually commute") {
    for (std::size_t L = 2; L <= 4; ++L) {
        const LatticeParams p(L);
        Tableau t = build_toric_tableau(p);
        auto [s_alpha, s_beta] = string_operators(p);
        t.push(s_alpha);
        t.push(s_beta);
        CHECK(t.mutually_commuting());
    }
}

TEST_CASE("L=2 frozen supports") {
    const LatticeParams p(2);
    auto [s_alpha, s_beta] = string_operators(p);
    CHECK(s_alpha.label() == "ZZIIIIII");
    CHECK(s_beta.label() == "IIIIIIXX");
    // star at (1,1): X on (1,1,x)=1, (2,1,x)=2, (1,1,y)=5, (1,2,y)=7
    CHECK(build_star(1, 1, p).label() == "XXIIXIXI");
    // plaquette at (1,1): Z on (1,1,x)=1, (1,2,x)=3, (1,1,y)=5, (2,1,y)=6
    CHECK(build_plaquette(1, 1, p).label() == "ZIZIZZII");
}

TEST_CASE("tableau column order is stars then plaquettes in (i,j) order") {
    const LatticeParams p(3);
    const Tableau t = build_toric_tableau(p);
    CHECK(t.size() == 2 * p.L * p.L);
    for (std::size_t i = 1; i <= p.L; ++i)
        for (std::size_t j = 1; j <= p.L; ++j) {
            const std::size_t c = generator_column(i, j, p);
            CHECK(t.generators[c - 1] == build_star(i, j, p));
            CHECK(t.generators[p.L * p.L + c - 1] == build_plaquette(i, j, p));
        }
}
