#include "qdialogue/protocol.h"

namespace qdialogue {

namespace {

void record(StateTrace *trace, const TwoQubitState &s) {
    if (trace != nullptr) {
        trace->push_back(s);
    }
}

// The quantum leg shared by both protocols. Modes never enter here, so the
// state trajectory and the random draws are mode-independent.
BellIndex exchange(PauliCode bob_bits, PauliCode alice_bits, AdversaryChannel *channel, RandomStream &rng,
                   StateTrace *trace) {
    TwoQubitState pair = apply_pauli(bell_state(BellIndex{}), bob_bits, Qubit::Travel);
    record(trace, pair);
    TwoQubitState at_alice = channel != nullptr ? channel->on_forward(pair, rng) : pair;
    record(trace, at_alice);
    TwoQubitState encoded = apply_pauli(at_alice, alice_bits, Qubit::Travel);
    record(trace, encoded);
    TwoQubitState at_bob = channel != nullptr ? channel->on_return(encoded, rng) : encoded;
    record(trace, at_bob);
    auto [outcome, collapsed] = bell_measure(at_bob, rng);
    record(trace, collapsed);
    return outcome;
}

void attach_eve(RoundTranscript &t, const AdversaryChannel *channel) {
    if (channel == nullptr) {
        return;
    }
    EveReport report = channel->observe_public(t.announcements);
    if (!report.empty()) {
        t.eve_report = report;
    }
}

RoundTranscript original_round(PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits, AdversaryChannel *channel,
                               RandomStream &rng, const RoundOptions &options) {
    RoundTranscript t;
    t.round_id = options.round_id;
    t.protocol = ProtocolKind::Original;
    t.bob_mode = Mode::Message;
    t.alice_mode = alice_mode;
    t.bob_code = bob_bits;
    t.alice_code = alice_bits;

    t.outcome = exchange(bob_bits, alice_bits, channel, rng, options.trace);
    t.announcements.push_back(Announcement::receipt_ack(Party::Alice));
    t.announcements.push_back(Announcement::mode_reveal(Party::Alice, alice_mode));

    if (alice_mode == Mode::Message) {
        t.bob_decoded = decode_bits(t.outcome, bob_bits);
        if (options.reveal_outcome) {
            t.announcements.push_back(Announcement::outcome_reveal(Party::Bob, t.outcome));
            t.alice_decoded = decode_bits(t.outcome, alice_bits);
        }
    } else {
        t.announcements.push_back(Announcement::op_reveal(Party::Alice, alice_bits));
        t.check_performed = true;
        t.check_passed = cm_check(t.outcome, bob_bits, alice_bits);
    }
    attach_eve(t, channel);
    return t;
}

RoundTranscript modified_round(Mode bob_mode, PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                               AdversaryChannel *channel, RandomStream &rng, const RoundOptions &options) {
    RoundTranscript t;
    t.round_id = options.round_id;
    t.protocol = ProtocolKind::Modified;
    t.bob_mode = bob_mode;
    t.alice_mode = alice_mode;
    t.bob_code = bob_bits;
    t.alice_code = alice_bits;

    t.outcome = exchange(bob_bits, alice_bits, channel, rng, options.trace);
    t.announcements.push_back(Announcement::receipt_ack(Party::Alice));
    // Modes go public only once Bob's measurement is done.
    t.announcements.push_back(Announcement::mode_reveal(Party::Alice, alice_mode));
    t.announcements.push_back(Announcement::mode_reveal(Party::Bob, bob_mode));

    bool alice_cm = alice_mode == Mode::Check;
    bool bob_cm = bob_mode == Mode::Check;
    if (alice_cm && bob_cm) {
        t.announcements.push_back(Announcement::op_reveal(Party::Alice, alice_bits));
        t.announcements.push_back(Announcement::op_reveal(Party::Bob, bob_bits));
        t.announcements.push_back(Announcement::outcome_reveal(Party::Bob, t.outcome));
        t.check_performed = true;
        t.check_passed = cm_check(t.outcome, bob_bits, alice_bits);
    } else if (!alice_cm && !bob_cm) {
        t.bob_decoded = decode_bits(t.outcome, bob_bits);
        if (options.reveal_outcome) {
            t.announcements.push_back(Announcement::outcome_reveal(Party::Bob, t.outcome));
            t.alice_decoded = decode_bits(t.outcome, alice_bits);
        }
    } else if (alice_cm) {
        // Only Bob's message travels.
        if (options.reveal_outcome) {
            t.announcements.push_back(Announcement::outcome_reveal(Party::Bob, t.outcome));
            t.alice_decoded = decode_bits(t.outcome, alice_bits);
        }
    } else {
        // Only Alice's message travels; the outcome stays with Bob.
        t.bob_decoded = decode_bits(t.outcome, bob_bits);
    }
    attach_eve(t, channel);
    return t;
}

}  // namespace

std::string_view to_string(ProtocolKind p) { return p == ProtocolKind::Original ? "original" : "modified"; }

std::optional<ProtocolKind> parse_protocol(std::string_view s) {
    if (s == "original") {
        return ProtocolKind::Original;
    }
    if (s == "modified") {
        return ProtocolKind::Modified;
    }
    return std::nullopt;
}

RoundTranscript run_round_original(PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   AdversaryChannel &channel, RandomStream &rng, const RoundOptions &options) {
    return original_round(bob_bits, alice_mode, alice_bits, &channel, rng, options);
}

RoundTranscript run_round_original(PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits, RandomStream &rng,
                                   const RoundOptions &options) {
    return original_round(bob_bits, alice_mode, alice_bits, nullptr, rng, options);
}

RoundTranscript run_round_modified(Mode bob_mode, PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   AdversaryChannel &channel, RandomStream &rng, const RoundOptions &options) {
    return modified_round(bob_mode, bob_bits, alice_mode, alice_bits, &channel, rng, options);
}

RoundTranscript run_round_modified(Mode bob_mode, PauliCode bob_bits, Mode alice_mode, PauliCode alice_bits,
                                   RandomStream &rng, const RoundOptions &options) {
    return modified_round(bob_mode, bob_bits, alice_mode, alice_bits, nullptr, rng, options);
}

}  // namespace qdialogue
