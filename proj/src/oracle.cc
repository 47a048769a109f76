#include "qdialogue/oracle.h"

#include <stdexcept>
#include <vector>

namespace qdialogue {

namespace {

// a + b * sqrt(2) with rational a, b.
struct Surd {
    Fraction a{0};
    Fraction b{0};

    Surd operator+(const Surd &o) const { return {a + o.a, b + o.b}; }
    Surd operator-(const Surd &o) const { return {a - o.a, b - o.b}; }
    Surd operator*(const Surd &o) const { return {a * o.a + 2 * b * o.b, a * o.b + b * o.a}; }
    Surd operator-() const { return {-a, -b}; }
    bool operator==(const Surd &) const = default;
};

struct ExactComplex {
    Surd re;
    Surd im;

    ExactComplex operator+(const ExactComplex &o) const { return {re + o.re, im + o.im}; }
    ExactComplex operator*(const ExactComplex &o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    ExactComplex conj() const { return {re, -im}; }
};

using ExactPair = std::array<ExactComplex, 4>;
using IntMatrix = std::array<std::array<int, 2>, 2>;

ExactComplex integer(int v) { return {Surd{Fraction(v), Fraction(0)}, Surd{}}; }

// 1/sqrt(2) = sqrt(2)/2.
ExactComplex inv_sqrt2(int sign) { return {Surd{Fraction(0), Fraction(sign, 2)}, Surd{}}; }

const std::array<IntMatrix, 4> kPauli = {{
    {{{1, 0}, {0, 1}}},    // I
    {{{0, 1}, {1, 0}}},    // X
    {{{0, 1}, {-1, 0}}},   // iY
    {{{1, 0}, {0, -1}}},   // Z
}};

// psi_{x,y} written out over |00>, |01>, |10>, |11>.
ExactPair bell_vector(int idx) {
    ExactComplex z = integer(0);
    switch (idx) {
        case 0:
            return {z, inv_sqrt2(1), inv_sqrt2(1), z};
        case 1:
            return {inv_sqrt2(1), z, z, inv_sqrt2(1)};
        case 2:
            return {inv_sqrt2(1), z, z, inv_sqrt2(-1)};
        default:
            return {z, inv_sqrt2(-1), inv_sqrt2(1), z};
    }
}

ExactPair on_travel(const IntMatrix &m, const ExactPair &v) {
    ExactPair out{};
    for (int h = 0; h < 2; h++) {
        for (int row = 0; row < 2; row++) {
            ExactComplex acc = integer(0);
            for (int col = 0; col < 2; col++) {
                acc = acc + integer(m[row][col]) * v[2 * h + col];
            }
            out[2 * h + row] = acc;
        }
    }
    return out;
}

// Unnormalized projection of the travel qubit onto `bit`.
ExactPair project_travel(const ExactPair &v, int bit) {
    ExactPair out{};
    for (int h = 0; h < 2; h++) {
        out[2 * h + bit] = v[2 * h + bit];
    }
    return out;
}

Fraction squared_overlap(const ExactPair &bra, const ExactPair &ket) {
    ExactComplex acc = integer(0);
    for (size_t i = 0; i < 4; i++) {
        acc = acc + bra[i].conj() * ket[i];
    }
    Surd p = acc.re * acc.re + acc.im * acc.im;
    if (p.b != Fraction(0)) {
        throw std::logic_error("exact_oracle: Born weight left Q");
    }
    return p.a;
}

struct Branch {
    int bob;
    int alice;
    int outcome;
    std::optional<int> eve_alice;
    Fraction weight;
};

// Pairs Bob measures, each with the weight of reaching it and what Eve inferred.
struct Delivery {
    ExactPair pair;
    Fraction weight;
    std::optional<int> eve_alice;
};

std::vector<Delivery> deliveries(Strategy strategy, int bob, int alice) {
    ExactPair sent = on_travel(kPauli[bob], bell_vector(0));
    std::vector<Delivery> out;
    switch (strategy) {
        case Strategy::None:
            out.push_back({on_travel(kPauli[alice], sent), Fraction(1), std::nullopt});
            break;
        case Strategy::Disturbance:
            for (int d = 0; d < 4; d++) {
                out.push_back({on_travel(kPauli[d], on_travel(kPauli[alice], sent)), Fraction(1, 4), std::nullopt});
            }
            break;
        case Strategy::MeasureResend:
            // Collapse weights stay inside the unnormalized vectors.
            for (int bit = 0; bit < 2; bit++) {
                out.push_back({on_travel(kPauli[alice], project_travel(sent, bit)), Fraction(1), std::nullopt});
            }
            break;
        case Strategy::BellSubstitution:
            for (int eve = 0; eve < 4; eve++) {
                ExactPair eve_pair = on_travel(kPauli[alice], bell_vector(eve));
                for (int seen = 0; seen < 4; seen++) {
                    Fraction q = squared_overlap(bell_vector(seen), eve_pair);
                    if (q == Fraction(0)) {
                        continue;
                    }
                    int inferred = seen ^ eve;
                    out.push_back({on_travel(kPauli[inferred], sent), Fraction(1, 4) * q, inferred});
                }
            }
            break;
    }
    return out;
}

struct ModeRules {
    bool check;
    bool outcome_public;
    bool alice_decodes;
    bool bob_decodes;
};

// Announcement rules per (alice CM, bob CM), with outcomes revealed by default.
ModeRules rules(ProtocolKind protocol, bool alice_cm, bool bob_cm) {
    if (protocol == ProtocolKind::Original) {
        if (alice_cm) {
            return {true, false, false, false};
        }
        return {false, true, true, true};
    }
    if (alice_cm && bob_cm) {
        return {true, true, false, false};
    }
    if (!alice_cm && !bob_cm) {
        return {false, true, true, true};
    }
    if (alice_cm) {
        return {false, true, true, false};
    }
    return {false, false, false, true};
}

struct Ratio {
    Fraction hit{0};
    Fraction total{0};
    void add(bool ok, const Fraction &w) {
        total += w;
        if (ok) {
            hit += w;
        }
    }
    std::optional<Fraction> value() const {
        if (total == Fraction(0)) {
            return std::nullopt;
        }
        return hit / total;
    }
};

}  // namespace

std::string to_string(const Fraction &f) {
    if (f.denominator() == 1) {
        return std::to_string(f.numerator());
    }
    return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

double to_double(const Fraction &f) { return boost::rational_cast<double>(f); }

OracleResult exact_oracle(ProtocolKind protocol, Strategy strategy) {
    std::vector<Branch> branches;
    for (int bob = 0; bob < 4; bob++) {
        for (int alice = 0; alice < 4; alice++) {
            for (const auto &d : deliveries(strategy, bob, alice)) {
                for (int outcome = 0; outcome < 4; outcome++) {
                    Fraction p = squared_overlap(bell_vector(outcome), d.pair);
                    if (p == Fraction(0)) {
                        continue;
                    }
                    branches.push_back({bob, alice, outcome, d.eve_alice, Fraction(1, 16) * d.weight * p});
                }
            }
        }
    }

    OracleResult result;
    result.protocol = protocol;
    result.strategy = strategy;
    result.branches = branches.size();

    for (const auto &b : branches) {
        result.outcome_distribution[b.bob][b.alice][b.outcome] += b.weight * 16;
    }
    for (const auto &by_bob : result.outcome_distribution) {
        for (const auto &row : by_bob) {
            if (row[0] + row[1] + row[2] + row[3] != Fraction(1)) {
                throw std::logic_error("exact_oracle: outcome distribution does not sum to 1");
            }
        }
    }

    std::vector<std::pair<bool, bool>> modes;  // (alice CM, bob CM)
    if (protocol == ProtocolKind::Original) {
        modes = {{false, false}, {true, false}};
    } else {
        modes = {{false, false}, {false, true}, {true, false}, {true, true}};
    }

    Ratio pass;
    Ratio eve_alice;
    Ratio eve_bob;
    Ratio alice_decode;
    Ratio bob_decode;
    for (const auto &[alice_cm, bob_cm] : modes) {
        ModeRules r = rules(protocol, alice_cm, bob_cm);
        for (const auto &b : branches) {
            bool consistent = b.outcome == (b.bob ^ b.alice);
            if (r.check) {
                pass.add(consistent, b.weight);
            }
            // Bob decodes Alice as outcome ^ bob; Alice decodes Bob as outcome ^ alice.
            if (r.bob_decodes) {
                bob_decode.add((b.outcome ^ b.bob) == b.alice, b.weight);
            }
            if (r.alice_decodes) {
                alice_decode.add((b.outcome ^ b.alice) == b.bob, b.weight);
            }
            if (b.eve_alice) {
                eve_alice.add(*b.eve_alice == b.alice, b.weight);
                if (r.outcome_public) {
                    eve_bob.add((b.outcome ^ *b.eve_alice) == b.bob, b.weight);
                }
            }
        }
    }

    result.check_pass_probability = *pass.value();
    result.detection_probability = 1 - result.check_pass_probability;
    result.eve_alice_accuracy = eve_alice.value();
    result.eve_bob_public_accuracy = eve_bob.value();
    result.alice_decode_accuracy = *alice_decode.value();
    result.bob_decode_accuracy = *bob_decode.value();
    return result;
}

}  // namespace qdialogue
