#ifndef QDIALOGUE_TESTS_MATRIX_ORACLE_H
#define QDIALOGUE_TESTS_MATRIX_ORACLE_H

// Dense-matrix reference used only by tests. It writes the Pauli dictionary out
// by hand and works with explicit Kronecker products, so it shares nothing with
// the simulator's per-qubit update or its symplectic composition rule.

#include <array>
#include <cmath>
#include <complex>

namespace oracle {

using C = std::complex<double>;
using M2 = std::array<std::array<C, 2>, 2>;
using M4 = std::array<std::array<C, 4>, 4>;
using V4 = std::array<C, 4>;

inline constexpr double kS = 0.70710678118654752440;

// I, sigma_x, i*sigma_y, sigma_z.
inline M2 pauli(int index) {
    const C i{0, 1};
    const M2 sx{{{0, 1}, {1, 0}}};
    const M2 sy{{{0, -i}, {i, 0}}};
    const M2 sz{{{1, 0}, {0, -1}}};
    switch (index) {
        case 0:
            return M2{{{1, 0}, {0, 1}}};
        case 1:
            return sx;
        case 2: {
            M2 r{};
            for (int a = 0; a < 2; a++) {
                for (int b = 0; b < 2; b++) {
                    r[a][b] = i * sy[a][b];
                }
            }
            return r;
        }
        default:
            return sz;
    }
}

inline M2 mul(const M2 &a, const M2 &b) {
    M2 r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

inline M4 kron(const M2 &a, const M2 &b) {
    M4 r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            for (int k = 0; k < 2; k++) {
                for (int l = 0; l < 2; l++) {
                    r[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return r;
}

inline V4 apply(const M4 &m, const V4 &v) {
    V4 r{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            r[i] += m[i][j] * v[j];
        }
    }
    return r;
}

inline const M2 &identity() {
    static const M2 kI = pauli(0);
    return kI;
}

inline V4 psi00() { return V4{0, kS, kS, 0}; }

/// (I (x) U_{index}) psi00.
inline V4 bell(int index) { return oracle::apply(kron(identity(), pauli(index)), psi00()); }

inline C inner(const V4 &a, const V4 &b) {
    C r = 0;
    for (int i = 0; i < 4; i++) {
        r += std::conj(a[i]) * b[i];
    }
    return r;
}

inline double overlap_probability(const V4 &a, const V4 &b) { return std::norm(inner(a, b)); }

}  // namespace oracle

#endif
