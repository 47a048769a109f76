#ifndef QDIALOGUE_BELL_H
#define QDIALOGUE_BELL_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>

namespace qdialogue {

class RandomStream;

using Amplitude = std::complex<double>;

/// Two-bit Pauli encoding label (k, l) selecting U_{k,l} from the dense-coding
/// dictionary U_00 = I, U_01 = X, U_10 = iY, U_11 = Z.
struct PauliCode {
    bool k = false;
    bool l = false;

    /// 2k + l.
    constexpr uint8_t index() const { return static_cast<uint8_t>((k ? 2 : 0) | (l ? 1 : 0)); }
    static constexpr PauliCode from_index(uint8_t i) { return PauliCode{(i & 2) != 0, (i & 1) != 0}; }

    constexpr bool operator==(const PauliCode &) const = default;
    constexpr PauliCode operator^(const PauliCode &o) const { return PauliCode{k != o.k, l != o.l}; }

    std::string str() const;
};

/// Label (x, y) of a Bell-basis measurement outcome.
struct BellIndex {
    bool x = false;
    bool y = false;

    constexpr uint8_t index() const { return static_cast<uint8_t>((x ? 2 : 0) | (y ? 1 : 0)); }
    static constexpr BellIndex from_index(uint8_t i) { return BellIndex{(i & 2) != 0, (i & 1) != 0}; }

    constexpr bool operator==(const BellIndex &) const = default;

    std::string str() const;
};

constexpr BellIndex bell_index_of(PauliCode c) { return BellIndex{c.k, c.l}; }
constexpr PauliCode code_of(BellIndex b) { return PauliCode{b.x, b.y}; }

enum class Phase : uint8_t { PlusOne, MinusOne, PlusI, MinusI };

Amplitude phase_value(Phase p);
Phase phase_product(Phase a, Phase b);

/// A Pauli code together with the scalar it carries: phase * U_{code}.
struct PhasedPauli {
    PauliCode code;
    Phase phase = Phase::PlusOne;

    constexpr bool operator==(const PhasedPauli &) const = default;
};

using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

/// Entries of U_{code}.
Matrix2 pauli_matrix(PauliCode code);

/// Returns outer * inner as a phased code. The code part is the bitwise XOR.
PhasedPauli compose(PauliCode outer, PauliCode inner);

enum class Qubit : uint8_t { Home, Travel };

/// Pure state of a (home, travel) qubit pair.
///
/// Amplitudes are stored in the order |00>, |01>, |10>, |11> where the first
/// ket is the home qubit. Every instance is normalized to within 1e-9 and has
/// finite amplitudes; constructors enforce this.
class TwoQubitState {
   public:
    static constexpr double kNormTolerance = 1e-9;

    /// |00>.
    TwoQubitState();

    /// Throws std::invalid_argument when amplitudes are non-finite or not normalized.
    explicit TwoQubitState(const std::array<Amplitude, 4> &amps);

    /// Computational basis state |home travel>.
    static TwoQubitState basis(bool home, bool travel);

    const std::array<Amplitude, 4> &amplitudes() const { return amps_; }
    const Amplitude &operator[](size_t i) const { return amps_[i]; }

    double norm_squared() const;

    /// <this|other>.
    Amplitude inner(const TwoQubitState &other) const;

    /// |<this|other>| == 1 within tolerance.
    bool equal_up_to_phase(const TwoQubitState &other, double tol = kNormTolerance) const;

    /// Exact amplitude-wise equality (bitwise on doubles).
    bool operator==(const TwoQubitState &other) const;

   private:
    struct Unchecked {};
    TwoQubitState(const std::array<Amplitude, 4> &amps, Unchecked) : amps_(amps) {}

    friend TwoQubitState apply_pauli(const TwoQubitState &, PauliCode, Qubit);
    friend std::pair<bool, TwoQubitState> measure_computational(const TwoQubitState &, Qubit, RandomStream &);

    std::array<Amplitude, 4> amps_;
};

/// (I (x) U_{idx}) applied to (|01> + |10>)/sqrt(2).
TwoQubitState bell_state(BellIndex idx);

TwoQubitState apply_pauli(const TwoQubitState &state, PauliCode code, Qubit target);

/// Born probabilities |<psi_{x,y}|state>|^2 indexed by BellIndex::index().
std::array<double, 4> bell_probabilities(const TwoQubitState &state);

/// Samples a Bell-basis outcome and returns it with the collapsed state.
std::pair<BellIndex, TwoQubitState> bell_measure(const TwoQubitState &state, RandomStream &rng);

/// Probability that `target` reads 1.
double probability_of_one(const TwoQubitState &state, Qubit target);

std::pair<bool, TwoQubitState> measure_computational(const TwoQubitState &state, Qubit target, RandomStream &rng);

/// Recovers the other party's code from a Bell outcome and one's own code.
/// |x - k| on bits is x XOR k.
constexpr PauliCode decode_bits(BellIndex outcome, PauliCode own) {
    return PauliCode{outcome.x != own.k, outcome.y != own.l};
}

}  // namespace qdialogue

#endif
