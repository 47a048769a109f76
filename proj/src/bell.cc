#include "qdialogue/bell.h"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "qdialogue/random.h"

namespace qdialogue {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Index of basis ket |h t> in the amplitude array.
constexpr size_t ket(int h, int t) { return static_cast<size_t>(2 * h + t); }

// U_{k,l} = sign * X^(k^l) * Z^k, sign = -1 only for iY.
struct SymplecticForm {
    bool x;
    bool z;
    bool negative;
};

constexpr SymplecticForm symplectic(PauliCode c) { return SymplecticForm{c.k != c.l, c.k, c.k && !c.l}; }

size_t sample_index(const std::array<double, 4> &probs, RandomStream &rng) {
    double u = rng.uniform();
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t i = 0; i < probs.size(); i++) {
        if (probs[i] <= 0) {
            continue;
        }
        last_nonzero = i;
        acc += probs[i];
        if (u < acc) {
            return i;
        }
    }
    // Rounding left u above the accumulated total.
    return last_nonzero;
}

}  // namespace

std::string PauliCode::str() const { return std::string{k ? '1' : '0', l ? '1' : '0'}; }

std::string BellIndex::str() const { return std::string{x ? '1' : '0', y ? '1' : '0'}; }

Amplitude phase_value(Phase p) {
    switch (p) {
        case Phase::PlusOne:
            return {1, 0};
        case Phase::MinusOne:
            return {-1, 0};
        case Phase::PlusI:
            return {0, 1};
        case Phase::MinusI:
            return {0, -1};
    }
    throw std::logic_error("unreachable phase");
}

Phase phase_product(Phase a, Phase b) {
    // Encode as powers of i: +1 -> 0, +i -> 1, -1 -> 2, -i -> 3.
    auto power = [](Phase p) -> int {
        switch (p) {
            case Phase::PlusOne:
                return 0;
            case Phase::PlusI:
                return 1;
            case Phase::MinusOne:
                return 2;
            case Phase::MinusI:
                return 3;
        }
        return 0;
    };
    static constexpr Phase kByPower[4] = {Phase::PlusOne, Phase::PlusI, Phase::MinusOne, Phase::MinusI};
    return kByPower[(power(a) + power(b)) % 4];
}

Matrix2 pauli_matrix(PauliCode code) {
    switch (code.index()) {
        case 0:
            return {{{1, 0}, {0, 1}}};
        case 1:
            return {{{0, 1}, {1, 0}}};
        case 2:
            return {{{0, 1}, {-1, 0}}};
        default:
            return {{{1, 0}, {0, -1}}};
    }
}

PhasedPauli compose(PauliCode outer, PauliCode inner) {
    // (s1 X^a Z^b)(s2 X^c Z^d) = s1 s2 (-1)^(b c) X^(a^c) Z^(b^d).
    PauliCode result = outer ^ inner;
    SymplecticForm o = symplectic(outer);
    SymplecticForm i = symplectic(inner);
    SymplecticForm r = symplectic(result);
    bool negative = o.negative ^ i.negative ^ (o.z && i.x) ^ r.negative;
    return PhasedPauli{result, negative ? Phase::MinusOne : Phase::PlusOne};
}

TwoQubitState::TwoQubitState() : amps_{Amplitude{1, 0}, {}, {}, {}} {}

TwoQubitState::TwoQubitState(const std::array<Amplitude, 4> &amps) : amps_(amps) {
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("TwoQubitState: non-finite amplitude");
        }
    }
    if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
        throw std::invalid_argument("TwoQubitState: amplitudes are not normalized");
    }
}

TwoQubitState TwoQubitState::basis(bool home, bool travel) {
    std::array<Amplitude, 4> amps{};
    amps[ket(home, travel)] = 1;
    return TwoQubitState(amps, Unchecked{});
}

double TwoQubitState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

Amplitude TwoQubitState::inner(const TwoQubitState &other) const {
    Amplitude total = 0;
    for (size_t i = 0; i < 4; i++) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

bool TwoQubitState::equal_up_to_phase(const TwoQubitState &other, double tol) const {
    return std::abs(std::abs(inner(other)) - 1.0) <= tol;
}

bool TwoQubitState::operator==(const TwoQubitState &other) const {
    return std::memcmp(amps_.data(), other.amps_.data(), sizeof(amps_)) == 0;
}

TwoQubitState apply_pauli(const TwoQubitState &state, PauliCode code, Qubit target) {
    Matrix2 m = pauli_matrix(code);
    std::array<Amplitude, 4> out{};
    for (int h = 0; h < 2; h++) {
        for (int t = 0; t < 2; t++) {
            const Amplitude &a = state.amps_[ket(h, t)];
            if (target == Qubit::Travel) {
                out[ket(h, 0)] += m[0][t] * a;
                out[ket(h, 1)] += m[1][t] * a;
            } else {
                out[ket(0, t)] += m[0][h] * a;
                out[ket(1, t)] += m[1][h] * a;
            }
        }
    }
    return TwoQubitState(out, TwoQubitState::Unchecked{});
}

TwoQubitState bell_state(BellIndex idx) {
    static const std::array<TwoQubitState, 4> kBasis = [] {
        TwoQubitState root({Amplitude{}, Amplitude{kInvSqrt2}, Amplitude{kInvSqrt2}, Amplitude{}});
        return std::array<TwoQubitState, 4>{
            apply_pauli(root, PauliCode::from_index(0), Qubit::Travel),
            apply_pauli(root, PauliCode::from_index(1), Qubit::Travel),
            apply_pauli(root, PauliCode::from_index(2), Qubit::Travel),
            apply_pauli(root, PauliCode::from_index(3), Qubit::Travel),
        };
    }();
    return kBasis[idx.index()];
}

std::array<double, 4> bell_probabilities(const TwoQubitState &state) {
    std::array<double, 4> probs{};
    for (uint8_t i = 0; i < 4; i++) {
        probs[i] = std::norm(bell_state(BellIndex::from_index(i)).inner(state));
    }
    return probs;
}

std::pair<BellIndex, TwoQubitState> bell_measure(const TwoQubitState &state, RandomStream &rng) {
    auto probs = bell_probabilities(state);
    double total = probs[0] + probs[1] + probs[2] + probs[3];
    if (std::abs(total - 1.0) > TwoQubitState::kNormTolerance) {
        throw std::logic_error("bell_measure: Born probabilities do not sum to 1");
    }
    BellIndex outcome = BellIndex::from_index(static_cast<uint8_t>(sample_index(probs, rng)));
    return {outcome, bell_state(outcome)};
}

double probability_of_one(const TwoQubitState &state, Qubit target) {
    const auto &a = state.amplitudes();
    if (target == Qubit::Travel) {
        return std::norm(a[ket(0, 1)]) + std::norm(a[ket(1, 1)]);
    }
    return std::norm(a[ket(1, 0)]) + std::norm(a[ket(1, 1)]);
}

std::pair<bool, TwoQubitState> measure_computational(const TwoQubitState &state, Qubit target, RandomStream &rng) {
    double p1 = probability_of_one(state, target);
    std::array<double, 4> probs{1 - p1, p1, 0, 0};
    bool bit = sample_index(probs, rng) == 1;
    std::array<Amplitude, 4> out{};
    double kept = bit ? p1 : 1 - p1;
    double scale = 1.0 / std::sqrt(kept);
    for (int h = 0; h < 2; h++) {
        for (int t = 0; t < 2; t++) {
            int measured = target == Qubit::Travel ? t : h;
            if (measured == static_cast<int>(bit)) {
                out[ket(h, t)] = state.amps_[ket(h, t)] * scale;
            }
        }
    }
    return {bit, TwoQubitState(out, TwoQubitState::Unchecked{})};
}

}  // namespace qdialogue
