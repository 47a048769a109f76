#include "qdialogue/adversary.h"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qdialogue/protocol.h"

using namespace qdialogue;

namespace {

// Seed whose first code draw is `code`; bell-substitution draws Eve's code first.
uint64_t seed_for_eve_code(PauliCode code) {
    for (uint64_t seed = 0;; seed++) {
        if (RandomStream(seed).code() == code) {
            return seed;
        }
    }
}

}  // namespace

TEST(Strategy, NamesRoundTrip) {
    for (auto s : {Strategy::None, Strategy::Disturbance, Strategy::MeasureResend, Strategy::BellSubstitution}) {
        EXPECT_EQ(parse_strategy(to_string(s)), s);
    }
    EXPECT_EQ(to_string(Strategy::BellSubstitution), "bell-substitution");
    EXPECT_EQ(to_string(Strategy::MeasureResend), "measure-resend");
    EXPECT_FALSE(parse_strategy("entangle-and-measure"));
}

TEST(NoAttack, ForwardAndReturnAreIdentity) {
    AdversaryChannel channel(Strategy::None);
    RandomStream rng(1);
    RandomStream untouched(1);
    TwoQubitState s = bell_state(BellIndex{1, 0});
    EXPECT_EQ(channel.on_forward(s, rng), s);
    EXPECT_EQ(channel.on_return(s, rng), s);
    EXPECT_TRUE(channel.observe_public({}).empty());
    // The identity channel draws nothing.
    EXPECT_EQ(rng.next_u64(), untouched.next_u64());
}

TEST(BellSubstitution, ForwardParksBobsPairAndHandsOverEvesPair) {
    for (uint8_t e = 0; e < 4; e++) {
        PauliCode eve = PauliCode::from_index(e);
        RandomStream rng(seed_for_eve_code(eve));
        AdversaryChannel channel(Strategy::BellSubstitution);
        TwoQubitState bob_pair = bell_state(BellIndex{1, 1});
        TwoQubitState at_alice = channel.on_forward(bob_pair, rng);
        EXPECT_EQ(at_alice, bell_state(bell_index_of(eve)));
        ASSERT_TRUE(channel.eve_state().stored_bob_pair);
        EXPECT_EQ(*channel.eve_state().stored_bob_pair, bob_pair);
        EXPECT_EQ(*channel.eve_state().eve_code, eve);
        EXPECT_EQ(*channel.eve_state().eve_pair, at_alice);
    }
}

TEST(BellSubstitution, ReturnInfersAliceAndReplaysOnBob) {
    PauliCode eve{1, 0};
    PauliCode alice{0, 1};
    for (uint8_t b = 0; b < 4; b++) {
        PauliCode bob = PauliCode::from_index(b);
        RandomStream rng(seed_for_eve_code(eve));
        AdversaryChannel channel(Strategy::BellSubstitution);
        TwoQubitState at_alice = channel.on_forward(bell_state(bell_index_of(bob)), rng);
        TwoQubitState encoded = apply_pauli(at_alice, alice, Qubit::Travel);
        // Eve's own Bell outcome is (1,0) ^ (0,1) = (1,1) with certainty.
        EXPECT_NEAR(bell_probabilities(encoded)[3], 1.0, 1e-9);
        TwoQubitState at_bob = channel.on_return(encoded, rng);
        EXPECT_EQ(*channel.eve_state().inferred_alice, alice);
        EXPECT_TRUE(at_bob.equal_up_to_phase(bell_state(bell_index_of(bob ^ alice))));
        EXPECT_FALSE(channel.eve_state().stored_bob_pair);
        EXPECT_FALSE(channel.eve_state().eve_pair);
    }
}

TEST(BellSubstitution, ExactOverAllCodeTriples) {
    for (uint8_t b = 0; b < 4; b++) {
        for (uint8_t e = 0; e < 4; e++) {
            for (uint8_t a = 0; a < 4; a++) {
                PauliCode bob = PauliCode::from_index(b);
                PauliCode alice = PauliCode::from_index(a);
                RandomStream rng(seed_for_eve_code(PauliCode::from_index(e)));
                AdversaryChannel channel(Strategy::BellSubstitution);
                TwoQubitState at_alice = channel.on_forward(bell_state(bell_index_of(bob)), rng);
                TwoQubitState at_bob = channel.on_return(apply_pauli(at_alice, alice, Qubit::Travel), rng);
                EXPECT_EQ(*channel.eve_state().inferred_alice, alice);
                // Bob's pair is again a pure Bell state: no residual entanglement with Eve's pair.
                auto probs = bell_probabilities(at_bob);
                EXPECT_NEAR(probs[(bob ^ alice).index()], 1.0, 1e-9);
            }
        }
    }
}

TEST(BellSubstitution, ReturnWithoutForwardFaults) {
    AdversaryChannel channel(Strategy::BellSubstitution);
    RandomStream rng(0);
    EXPECT_THROW(channel.on_return(bell_state(BellIndex{}), rng), std::logic_error);
}

TEST(Channel, ForwardTwiceFaults) {
    AdversaryChannel channel(Strategy::Disturbance);
    RandomStream rng(0);
    channel.on_forward(bell_state(BellIndex{}), rng);
    EXPECT_THROW(channel.on_forward(bell_state(BellIndex{}), rng), std::logic_error);
}

TEST(MeasureResend, ForwardCollapsesToProductState) {
    constexpr int kDraws = 20000;
    RandomStream rng(17);
    int ones = 0;
    for (int i = 0; i < kDraws; i++) {
        AdversaryChannel channel(Strategy::MeasureResend);
        TwoQubitState out = channel.on_forward(bell_state(BellIndex{}), rng);
        bool is01 = out.equal_up_to_phase(TwoQubitState::basis(0, 1));
        bool is10 = out.equal_up_to_phase(TwoQubitState::basis(1, 0));
        ASSERT_TRUE(is01 || is10);
        ones += is01;
        TwoQubitState back = channel.on_return(out, rng);
        EXPECT_EQ(back, out);
    }
    double sigma = std::sqrt(0.25 / kDraws);
    EXPECT_LE(std::abs(ones / double(kDraws) - 0.5), 3 * sigma);
}

TEST(Disturbance, PassesOnlyForIdentityCode) {
    // Enumerate the four disturbance codes directly.
    int passing = 0;
    for (uint8_t d = 0; d < 4; d++) {
        for (uint8_t b = 0; b < 4; b++) {
            for (uint8_t a = 0; a < 4; a++) {
                PauliCode bob = PauliCode::from_index(b);
                PauliCode alice = PauliCode::from_index(a);
                TwoQubitState s = apply_pauli(bell_state(bell_index_of(bob)), alice, Qubit::Travel);
                s = apply_pauli(s, PauliCode::from_index(d), Qubit::Travel);
                auto probs = bell_probabilities(s);
                bool pass = probs[(bob ^ alice).index()] > 0.5;
                EXPECT_EQ(pass, d == 0);
                passing += pass;
            }
        }
    }
    EXPECT_EQ(passing, 16);  // 1/4 of 64
}

TEST(Disturbance, IdentityDrawLeavesWorldUnchanged) {
    for (uint64_t seed = 0; seed < 200; seed++) {
        RandomStream probe(seed);
        if (probe.code() != PauliCode{0, 0}) {
            continue;
        }
        RandomStream rng(seed);
        AdversaryChannel channel(Strategy::Disturbance);
        TwoQubitState s = bell_state(BellIndex{0, 1});
        channel.on_forward(s, rng);
        EXPECT_EQ(channel.on_return(s, rng), s);
        return;
    }
    FAIL() << "no seed drew the identity code";
}

TEST(ObservePublic, InfersBobFromPublicOutcome) {
    PauliCode alice{0, 1};
    PauliCode bob{1, 0};
    RandomStream rng(seed_for_eve_code(PauliCode{0, 0}));
    AdversaryChannel channel(Strategy::BellSubstitution);
    TwoQubitState at_alice = channel.on_forward(bell_state(bell_index_of(bob)), rng);
    channel.on_return(apply_pauli(at_alice, alice, Qubit::Travel), rng);

    std::vector<Announcement> with_outcome{Announcement::receipt_ack(Party::Alice),
                                           Announcement::mode_reveal(Party::Alice, Mode::Message),
                                           Announcement::outcome_reveal(Party::Bob, BellIndex{1, 1})};
    EveReport r = channel.observe_public(with_outcome);
    EXPECT_EQ(r.inferred_alice, alice);
    EXPECT_EQ(r.inferred_bob_public, (PauliCode{1, 0}));
    EXPECT_FALSE(r.inferred_bob_private);

    std::vector<Announcement> without{Announcement::receipt_ack(Party::Alice),
                                      Announcement::mode_reveal(Party::Alice, Mode::Message),
                                      Announcement::mode_reveal(Party::Bob, Mode::Check)};
    EveReport quiet = channel.observe_public(without);
    EXPECT_EQ(quiet.inferred_alice, alice);
    EXPECT_FALSE(quiet.inferred_bob_public);
}

TEST(ObservePublic, OtherStrategiesReportNothing) {
    for (auto s : {Strategy::None, Strategy::Disturbance, Strategy::MeasureResend}) {
        AdversaryChannel channel(s);
        RandomStream rng(3);
        TwoQubitState at_alice = channel.on_forward(bell_state(BellIndex{}), rng);
        channel.on_return(at_alice, rng);
        std::vector<Announcement> a{Announcement::outcome_reveal(Party::Bob, BellIndex{1, 1})};
        EXPECT_TRUE(channel.observe_public(a).empty());
    }
}
