#include "qdialogue/adversary.h"

#include <stdexcept>

namespace qdialogue {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::None:
            return "none";
        case Strategy::Disturbance:
            return "disturbance";
        case Strategy::MeasureResend:
            return "measure-resend";
        case Strategy::BellSubstitution:
            return "bell-substitution";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
    for (auto v : {Strategy::None, Strategy::Disturbance, Strategy::MeasureResend, Strategy::BellSubstitution}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    return std::nullopt;
}

TwoQubitState AdversaryChannel::on_forward(const TwoQubitState &world, RandomStream &rng) {
    if (in_flight_) {
        throw std::logic_error("AdversaryChannel: forward leg invoked twice without a return");
    }
    in_flight_ = true;
    eve_ = EveState{};

    switch (strategy_) {
        case Strategy::None:
        case Strategy::Disturbance:
            return world;
        case Strategy::MeasureResend:
            return measure_computational(world, Qubit::Travel, rng).second;
        case Strategy::BellSubstitution: {
            PauliCode code = rng.code();
            TwoQubitState substitute = bell_state(bell_index_of(code));
            eve_.stored_bob_pair = world;
            eve_.eve_code = code;
            eve_.eve_pair = substitute;
            return substitute;
        }
    }
    throw std::logic_error("unreachable strategy");
}

TwoQubitState AdversaryChannel::on_return(const TwoQubitState &world, RandomStream &rng) {
    if (!in_flight_) {
        throw std::logic_error("AdversaryChannel: return leg invoked before the forward leg");
    }
    in_flight_ = false;

    switch (strategy_) {
        case Strategy::None:
        case Strategy::MeasureResend:
            return world;
        case Strategy::Disturbance:
            return apply_pauli(world, rng.code(), Qubit::Travel);
        case Strategy::BellSubstitution: {
            if (!eve_.stored_bob_pair || !eve_.eve_pair || !eve_.eve_code) {
                throw std::logic_error("AdversaryChannel: bell-substitution state missing on return leg");
            }
            // `world` is Eve's pair after Alice encoded its travel qubit.
            BellIndex seen = bell_measure(world, rng).first;
            PauliCode alice = decode_bits(seen, *eve_.eve_code);
            TwoQubitState delivered = apply_pauli(*eve_.stored_bob_pair, alice, Qubit::Travel);
            eve_.inferred_alice = alice;
            eve_.stored_bob_pair.reset();
            eve_.eve_pair.reset();
            return delivered;
        }
    }
    throw std::logic_error("unreachable strategy");
}

EveReport AdversaryChannel::observe_public(std::span<const Announcement> transcript) const {
    EveReport report;
    if (strategy_ != Strategy::BellSubstitution || !eve_.inferred_alice) {
        return report;
    }
    report.inferred_alice = eve_.inferred_alice;
    for (const auto &a : transcript) {
        if (a.kind() == AnnouncementKind::OutcomeReveal) {
            report.inferred_bob_public = decode_bits(a.outcome(), *eve_.inferred_alice);
        }
    }
    return report;
}

}  // namespace qdialogue
