#ifndef QDIALOGUE_ORACLE_H
#define QDIALOGUE_ORACLE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "qdialogue/adversary.h"
#include "qdialogue/protocol.h"

namespace qdialogue {

using Fraction = boost::rational<int64_t>;

/// "p/q", or "p" when q == 1.
std::string to_string(const Fraction &f);
double to_double(const Fraction &f);

/// Exact outcome of a (protocol, strategy) pair under uniformly random codes.
///
/// Conditional rates are ratios over the branches where the quantity exists
/// (a check ran, Eve inferred something, a party decoded). Because the
/// quantum leg ignores modes, these ratios do not depend on p_cm.
struct OracleResult {
    ProtocolKind protocol = ProtocolKind::Original;
    Strategy strategy = Strategy::None;

    Fraction check_pass_probability;
    Fraction detection_probability;
    /// Absent when the strategy never produces the inference.
    std::optional<Fraction> eve_alice_accuracy;
    std::optional<Fraction> eve_bob_public_accuracy;
    /// Alice decoding Bob's code, over rounds where she decodes.
    Fraction alice_decode_accuracy;
    /// Bob decoding Alice's code, over rounds where he decodes.
    Fraction bob_decode_accuracy;
    /// outcome_distribution[bob code][alice code][outcome], each row summing to 1.
    std::array<std::array<std::array<Fraction, 4>, 4>, 4> outcome_distribution{};

    /// Number of weighted branches visited.
    uint64_t branches = 0;
};

/// Enumerates every discrete branch (codes, Eve's draws, collapse branches,
/// Bell outcomes) with exact amplitudes in Q(sqrt 2)[i] and rational weights.
/// Shares no state-vector code with the floating-point simulator.
OracleResult exact_oracle(ProtocolKind protocol, Strategy strategy);

}  // namespace qdialogue

#endif
