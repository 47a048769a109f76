#include "qdialogue/bell.h"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "matrix_oracle.h"
#include "qdialogue/random.h"

using namespace qdialogue;

namespace {

constexpr double kStateTol = 1e-9;
constexpr double kMatrixTol = 1e-12;
constexpr double kS = oracle::kS;

void expect_amps(const TwoQubitState &s, const std::array<Amplitude, 4> &ref, double tol = kStateTol) {
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(s[i].real(), ref[i].real(), tol) << "i=" << i << " (real)";
        EXPECT_NEAR(s[i].imag(), ref[i].imag(), tol) << "i=" << i << " (imag)";
    }
}

TwoQubitState from_oracle(const oracle::V4 &v) { return TwoQubitState(v); }

// Hand-rolled generator of normalized random states.
TwoQubitState random_state(RandomStream &rng) {
    std::array<Amplitude, 4> amps;
    double norm = 0;
    for (auto &a : amps) {
        a = Amplitude(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return TwoQubitState(amps);
}

}  // namespace

TEST(BellState, RootStateIsSymmetricSinglet) {
    expect_amps(bell_state(BellIndex{0, 0}), {0, kS, kS, 0});
}

TEST(BellState, FrozenExamples) {
    expect_amps(bell_state(BellIndex{0, 1}), {kS, 0, 0, kS});
    expect_amps(bell_state(BellIndex{1, 1}), {0, -kS, kS, 0});
}

TEST(BellState, MatchesKroneckerOracle) {
    for (uint8_t i = 0; i < 4; i++) {
        expect_amps(bell_state(BellIndex::from_index(i)), oracle::bell(i));
    }
}

TEST(BellState, Orthonormal) {
    for (uint8_t a = 0; a < 4; a++) {
        for (uint8_t b = 0; b < 4; b++) {
            Amplitude ip = bell_state(BellIndex::from_index(a)).inner(bell_state(BellIndex::from_index(b)));
            EXPECT_NEAR(std::abs(ip), a == b ? 1.0 : 0.0, kStateTol) << int(a) << "," << int(b);
        }
    }
}

TEST(ApplyPauli, Examples) {
    TwoQubitState root = bell_state(BellIndex{0, 0});
    EXPECT_EQ(apply_pauli(root, PauliCode{0, 0}, Qubit::Travel), root);
    expect_amps(apply_pauli(root, PauliCode{0, 1}, Qubit::Travel), {kS, 0, 0, kS});
    TwoQubitState iy = apply_pauli(root, PauliCode{1, 0}, Qubit::Travel);
    expect_amps(iy, {kS, 0, 0, -kS});
    EXPECT_TRUE(iy.equal_up_to_phase(bell_state(BellIndex{1, 0})));
}

TEST(ApplyPauli, MatchesKroneckerOracleOnBothQubits) {
    RandomStream rng(11);
    for (int trial = 0; trial < 50; trial++) {
        TwoQubitState s = random_state(rng);
        oracle::V4 v{s[0], s[1], s[2], s[3]};
        for (uint8_t c = 0; c < 4; c++) {
            expect_amps(apply_pauli(s, PauliCode::from_index(c), Qubit::Travel),
                        oracle::apply(oracle::kron(oracle::identity(), oracle::pauli(c)), v), kMatrixTol);
            expect_amps(apply_pauli(s, PauliCode::from_index(c), Qubit::Home),
                        oracle::apply(oracle::kron(oracle::pauli(c), oracle::identity()), v), kMatrixTol);
        }
    }
}

TEST(ApplyPauli, EncodingLawExhaustive) {
    for (uint8_t kl = 0; kl < 4; kl++) {
        for (uint8_t ij = 0; ij < 4; ij++) {
            PauliCode bob = PauliCode::from_index(kl);
            PauliCode alice = PauliCode::from_index(ij);
            TwoQubitState encoded = apply_pauli(bell_state(bell_index_of(bob)), alice, Qubit::Travel);
            EXPECT_NEAR(std::abs(encoded.inner(bell_state(bell_index_of(alice ^ bob)))), 1.0, kStateTol);
        }
    }
}

TEST(ApplyPauli, PreservesNormProperty) {
    RandomStream rng(5);
    for (int trial = 0; trial < 500; trial++) {
        TwoQubitState s = random_state(rng);
        PauliCode c = rng.code();
        Qubit q = rng.bit() ? Qubit::Home : Qubit::Travel;
        TwoQubitState once = apply_pauli(s, c, q);
        EXPECT_NEAR(once.norm_squared(), 1.0, kStateTol);
        // Every U_{k,l} squares to +-I.
        EXPECT_TRUE(apply_pauli(once, c, q).equal_up_to_phase(s));
    }
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose(PauliCode{0, 0}, PauliCode{1, 0}), (PhasedPauli{PauliCode{1, 0}, Phase::PlusOne}));
    EXPECT_EQ(compose(PauliCode{0, 1}, PauliCode{1, 0}), (PhasedPauli{PauliCode{1, 1}, Phase::MinusOne}));
    EXPECT_EQ(compose(PauliCode{1, 0}, PauliCode{1, 0}), (PhasedPauli{PauliCode{0, 0}, Phase::MinusOne}));
}

TEST(Compose, AllPairsMatchMatrixProduct) {
    for (uint8_t o = 0; o < 4; o++) {
        for (uint8_t i = 0; i < 4; i++) {
            PhasedPauli p = compose(PauliCode::from_index(o), PauliCode::from_index(i));
            EXPECT_EQ(p.code, PauliCode::from_index(o) ^ PauliCode::from_index(i));
            oracle::M2 direct = oracle::mul(oracle::pauli(o), oracle::pauli(i));
            oracle::M2 rebuilt = oracle::pauli(p.code.index());
            for (int r = 0; r < 2; r++) {
                for (int c = 0; c < 2; c++) {
                    Amplitude v = phase_value(p.phase) * rebuilt[r][c];
                    EXPECT_NEAR(std::abs(v - direct[r][c]), 0.0, kMatrixTol) << int(o) << "," << int(i);
                }
            }
        }
    }
}

TEST(Compose, PauliMatrixDictionary) {
    for (uint8_t c = 0; c < 4; c++) {
        Matrix2 m = pauli_matrix(PauliCode::from_index(c));
        oracle::M2 ref = oracle::pauli(c);
        for (int r = 0; r < 2; r++) {
            for (int col = 0; col < 2; col++) {
                EXPECT_EQ(m[r][col], ref[r][col]);
            }
        }
    }
}

TEST(Phase, ProductTable) {
    const Phase all[] = {Phase::PlusOne, Phase::MinusOne, Phase::PlusI, Phase::MinusI};
    for (Phase a : all) {
        for (Phase b : all) {
            EXPECT_EQ(phase_value(phase_product(a, b)), phase_value(a) * phase_value(b));
        }
    }
}

TEST(BellMeasure, EigenstateIsCertain) {
    RandomStream rng(1);
    for (int i = 0; i < 100; i++) {
        auto [outcome, post] = bell_measure(bell_state(BellIndex{1, 0}), rng);
        EXPECT_EQ(outcome, (BellIndex{1, 0}));
        EXPECT_EQ(post, bell_state(BellIndex{1, 0}));
    }
}

TEST(BellMeasure, ProductStateSplitsEvenly) {
    auto probs = bell_probabilities(TwoQubitState::basis(0, 1));
    EXPECT_NEAR(probs[0], 0.5, kStateTol);
    EXPECT_NEAR(probs[1], 0.0, kStateTol);
    EXPECT_NEAR(probs[2], 0.0, kStateTol);
    EXPECT_NEAR(probs[3], 0.5, kStateTol);
}

TEST(BellMeasure, SigmaZEncodingGivesOneOne) {
    TwoQubitState s = apply_pauli(bell_state(BellIndex{0, 0}), PauliCode{1, 1}, Qubit::Travel);
    auto probs = bell_probabilities(s);
    EXPECT_NEAR(probs[3], 1.0, kStateTol);
    RandomStream rng(2);
    EXPECT_EQ(bell_measure(s, rng).first, (BellIndex{1, 1}));
}

TEST(BellMeasure, ProbabilitiesMatchOracleAndSumToOne) {
    RandomStream rng(3);
    for (int trial = 0; trial < 200; trial++) {
        TwoQubitState s = random_state(rng);
        oracle::V4 v{s[0], s[1], s[2], s[3]};
        auto probs = bell_probabilities(s);
        double total = 0;
        for (uint8_t i = 0; i < 4; i++) {
            EXPECT_NEAR(probs[i], oracle::overlap_probability(oracle::bell(i), v), kMatrixTol);
            total += probs[i];
        }
        EXPECT_NEAR(total, 1.0, kStateTol);
    }
}

TEST(BellMeasure, SamplingWithinThreeSigma) {
    constexpr int kDraws = 100000;
    RandomStream rng(99);
    TwoQubitState s = from_oracle(oracle::V4{0, 1, 0, 0});
    std::array<int, 4> counts{};
    for (int i = 0; i < kDraws; i++) {
        counts[bell_measure(s, rng).first.index()]++;
    }
    auto probs = bell_probabilities(s);
    for (size_t i = 0; i < 4; i++) {
        double sigma = std::sqrt(probs[i] * (1 - probs[i]) / kDraws);
        EXPECT_LE(std::abs(counts[i] / double(kDraws) - probs[i]), 3 * sigma) << "outcome " << i;
    }
}

TEST(MeasureComputational, BasisStateIsCertain) {
    RandomStream rng(4);
    auto [bit, post] = measure_computational(TwoQubitState::basis(0, 1), Qubit::Travel, rng);
    EXPECT_TRUE(bit);
    EXPECT_EQ(post, TwoQubitState::basis(0, 1));
    EXPECT_DOUBLE_EQ(probability_of_one(TwoQubitState::basis(0, 1), Qubit::Travel), 1.0);
}

TEST(MeasureComputational, RootMarginalIsHalf) {
    TwoQubitState root = bell_state(BellIndex{0, 0});
    EXPECT_NEAR(probability_of_one(root, Qubit::Travel), 0.5, kStateTol);
    EXPECT_NEAR(probability_of_one(root, Qubit::Home), 0.5, kStateTol);
}

TEST(MeasureComputational, CollapseRenormalizes) {
    TwoQubitState root = bell_state(BellIndex{0, 0});
    RandomStream rng(6);
    bool saw[2] = {false, false};
    for (int i = 0; i < 64 && !(saw[0] && saw[1]); i++) {
        auto [bit, post] = measure_computational(root, Qubit::Travel, rng);
        saw[bit] = true;
        // |0>_h|1>_t for bit 1, |1>_h|0>_t for bit 0.
        EXPECT_TRUE(post.equal_up_to_phase(bit ? TwoQubitState::basis(0, 1) : TwoQubitState::basis(1, 0)));
        EXPECT_NEAR(post.norm_squared(), 1.0, kStateTol);
    }
    EXPECT_TRUE(saw[0] && saw[1]);
}

TEST(DecodeBits, Examples) {
    EXPECT_EQ(decode_bits(BellIndex{1, 0}, PauliCode{0, 0}), (PauliCode{1, 0}));
    EXPECT_EQ(decode_bits(BellIndex{0, 0}, PauliCode{0, 0}), (PauliCode{0, 0}));
    EXPECT_EQ(decode_bits(BellIndex{1, 1}, PauliCode{0, 1}), (PauliCode{1, 0}));
}

TEST(DecodeBits, InvertsEncodingExhaustive) {
    for (uint8_t ij = 0; ij < 4; ij++) {
        for (uint8_t kl = 0; kl < 4; kl++) {
            PauliCode alice = PauliCode::from_index(ij);
            PauliCode bob = PauliCode::from_index(kl);
            EXPECT_EQ(decode_bits(bell_index_of(alice ^ bob), bob), alice);
            // |x - k| on bits.
            BellIndex o = bell_index_of(alice ^ bob);
            EXPECT_EQ(decode_bits(o, bob).k, std::abs(int(o.x) - int(bob.k)) == 1);
            EXPECT_EQ(decode_bits(o, bob).l, std::abs(int(o.y) - int(bob.l)) == 1);
        }
    }
}

TEST(TwoQubitState, RejectsInvalidAmplitudes) {
    EXPECT_THROW(TwoQubitState({1, 1, 0, 0}), std::invalid_argument);
    double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(TwoQubitState({Amplitude(nan, 0), 0, 0, 0}), std::invalid_argument);
    EXPECT_NO_THROW(TwoQubitState({0, Amplitude(0, 1), 0, 0}));
}

TEST(TwoQubitState, HoldsExactlyFourAmplitudes) {
    static_assert(std::tuple_size_v<std::decay_t<decltype(TwoQubitState().amplitudes())>> == 4);
    SUCCEED();
}

TEST(RandomStream, SameSeedSameDraws) {
    RandomStream a(123);
    RandomStream b(123);
    for (int i = 0; i < 1000; i++) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
    EXPECT_NE(RandomStream::substream_seed(123, 0), RandomStream::substream_seed(123, 1));
    EXPECT_EQ(RandomStream::substream_seed(123, 7), RandomStream::substream_seed(123, 7));
}

TEST(RandomStream, BernoulliEdges) {
    RandomStream rng(8);
    for (int i = 0; i < 1000; i++) {
        EXPECT_FALSE(rng.bernoulli(0.0));
        EXPECT_TRUE(rng.bernoulli(1.0));
        double u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}
