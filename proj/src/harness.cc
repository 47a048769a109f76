#include "qdialogue/harness.h"

#include <algorithm>
#include <cmath>
#include <thread>

namespace qdialogue {

namespace {

std::optional<double> ratio(uint64_t num, uint64_t den) {
    if (den == 0) {
        return std::nullopt;
    }
    return static_cast<double>(num) / static_cast<double>(den);
}

// One party's outgoing text and what the others made of it.
struct Feed {
    std::vector<PauliCode> codes;
    size_t next = 0;
    std::vector<std::optional<PauliCode>> received;
    std::vector<std::optional<PauliCode>> eve;

    explicit Feed(std::string_view text) : codes(text_to_codes(text)), received(codes.size()), eve(codes.size()) {}
    bool pending() const { return next < codes.size(); }
};

std::optional<std::string> assemble(const std::vector<std::optional<PauliCode>> &slots) {
    std::vector<PauliCode> codes;
    codes.reserve(slots.size());
    for (const auto &s : slots) {
        if (!s) {
            return std::nullopt;
        }
        codes.push_back(*s);
    }
    return codes_to_text(codes);
}

struct Feeds {
    Feed alice;
    Feed bob;
};

void tally(RunSummary &s, const RoundTranscript &t, bool alice_payload, bool bob_payload) {
    s.rounds_total++;
    bool alice_cm = t.alice_mode == Mode::Check;
    bool bob_cm = t.bob_mode == Mode::Check;
    if (t.check_performed) {
        s.rounds_cm++;
        if (!*t.check_passed) {
            s.checks_failed++;
        }
    } else if (t.protocol == ProtocolKind::Original || (!alice_cm && !bob_cm)) {
        s.rounds_mm++;
    } else if (alice_cm) {
        s.rounds_alice_cm_bob_mm++;
    } else {
        s.rounds_alice_mm_bob_cm++;
    }

    if (t.alice_decoded) {
        s.alice_decodes++;
        if (*t.alice_decoded == t.bob_code) {
            s.alice_decodes_correct++;
            if (bob_payload) {
                s.throughput_bits += 2;
            }
        }
    }
    if (t.bob_decoded) {
        s.bob_decodes++;
        if (*t.bob_decoded == t.alice_code) {
            s.bob_decodes_correct++;
            if (alice_payload) {
                s.throughput_bits += 2;
            }
        }
    }
    if (t.eve_report) {
        if (t.eve_report->inferred_alice) {
            s.eve_alice_inferences++;
            s.eve_alice_correct += *t.eve_report->inferred_alice == t.alice_code;
        }
        if (t.eve_report->inferred_bob_public) {
            s.eve_bob_public_inferences++;
            s.eve_bob_public_correct += *t.eve_report->inferred_bob_public == t.bob_code;
        }
    }
}

// Runs rounds [begin, end) of chunk `chunk`. `feeds` is null for uniform runs.
void run_chunk(const RunConfig &config, uint64_t chunk, uint64_t begin, uint64_t end, Feeds *feeds,
               RunSummary &summary, std::vector<RoundTranscript> *out, const TranscriptSink *sink) {
    RandomStream rng = RandomStream::substream(config.seed, chunk);
    bool modified = config.protocol == ProtocolKind::Modified;
    for (uint64_t r = begin; r < end; r++) {
        Mode alice_mode = rng.bernoulli(config.p_cm) ? Mode::Check : Mode::Message;
        Mode bob_mode = rng.bernoulli(config.p_cm) ? Mode::Check : Mode::Message;
        PauliCode alice_code = rng.code();
        PauliCode bob_code = rng.code();
        if (!modified) {
            bob_mode = Mode::Message;
        }
        bool round_mm = modified ? bob_mode == Mode::Message : alice_mode == Mode::Message;

        std::optional<size_t> alice_slot;
        std::optional<size_t> bob_slot;
        if (feeds != nullptr) {
            if (alice_mode == Mode::Message && feeds->alice.pending()) {
                alice_slot = feeds->alice.next++;
                alice_code = feeds->alice.codes[*alice_slot];
            }
            // Bob of the original protocol encodes before he learns the mode,
            // so he always sends his pending code but only spends it in MM.
            if (bob_mode == Mode::Message && feeds->bob.pending()) {
                bob_code = feeds->bob.codes[feeds->bob.next];
                if (round_mm) {
                    bob_slot = feeds->bob.next++;
                }
            }
        }

        AdversaryChannel channel(config.strategy);
        RoundOptions options{r, config.reveal_outcome, nullptr};
        RoundTranscript t = modified
                                ? run_round_modified(bob_mode, bob_code, alice_mode, alice_code, channel, rng, options)
                                : run_round_original(bob_code, alice_mode, alice_code, channel, rng, options);

        bool alice_payload = feeds != nullptr ? alice_slot.has_value() : alice_mode == Mode::Message;
        bool bob_payload = feeds != nullptr ? bob_slot.has_value() : bob_mode == Mode::Message;
        tally(summary, t, alice_payload, bob_payload);

        if (feeds != nullptr) {
            if (alice_slot) {
                feeds->alice.received[*alice_slot] = t.bob_decoded;
                if (t.eve_report) {
                    feeds->alice.eve[*alice_slot] = t.eve_report->inferred_alice;
                }
            }
            if (bob_slot) {
                feeds->bob.received[*bob_slot] = t.alice_decoded;
                if (t.eve_report) {
                    feeds->bob.eve[*bob_slot] = t.eve_report->inferred_bob_public;
                }
            }
        }
        if (out != nullptr) {
            out->push_back(std::move(t));
        } else if (sink != nullptr && *sink) {
            (*sink)(t);
        }
    }
}

}  // namespace

void RunConfig::validate() const {
    if (rounds == 0) {
        throw ConfigError("rounds", "rounds must be at least 1");
    }
    if (!(p_cm >= 0.0 && p_cm <= 1.0)) {
        throw ConfigError("p-cm", "p-cm must lie in [0, 1]");
    }
    if (threads == 0) {
        throw ConfigError("threads", "threads must be at least 1");
    }
}

std::optional<double> RunSummary::detection_rate() const { return ratio(checks_failed, rounds_cm); }
std::optional<double> RunSummary::alice_decode_accuracy() const { return ratio(alice_decodes_correct, alice_decodes); }
std::optional<double> RunSummary::bob_decode_accuracy() const { return ratio(bob_decodes_correct, bob_decodes); }
std::optional<double> RunSummary::eve_alice_accuracy() const { return ratio(eve_alice_correct, eve_alice_inferences); }
std::optional<double> RunSummary::eve_bob_public_accuracy() const {
    return ratio(eve_bob_public_correct, eve_bob_public_inferences);
}

RunSummary &RunSummary::operator+=(const RunSummary &o) {
    rounds_total += o.rounds_total;
    rounds_cm += o.rounds_cm;
    rounds_mm += o.rounds_mm;
    rounds_alice_cm_bob_mm += o.rounds_alice_cm_bob_mm;
    rounds_alice_mm_bob_cm += o.rounds_alice_mm_bob_cm;
    checks_failed += o.checks_failed;
    alice_decodes += o.alice_decodes;
    alice_decodes_correct += o.alice_decodes_correct;
    bob_decodes += o.bob_decodes;
    bob_decodes_correct += o.bob_decodes_correct;
    eve_alice_inferences += o.eve_alice_inferences;
    eve_alice_correct += o.eve_alice_correct;
    eve_bob_public_inferences += o.eve_bob_public_inferences;
    eve_bob_public_correct += o.eve_bob_public_correct;
    throughput_bits += o.throughput_bits;
    return *this;
}

RunResult run_sessions(const RunConfig &config, const TranscriptSink &sink) {
    config.validate();
    uint64_t chunks = (config.rounds + kChunkRounds - 1) / kChunkRounds;
    auto chunk_end = [&](uint64_t c) { return std::min(config.rounds, (c + 1) * kChunkRounds); };

    RunResult result;
    if (config.message_source == MessageSource::Text) {
        Feeds feeds{Feed(config.alice_text), Feed(config.bob_text)};
        for (uint64_t c = 0; c < chunks; c++) {
            run_chunk(config, c, c * kChunkRounds, chunk_end(c), &feeds, result.summary, nullptr, &sink);
        }
        result.texts = DialogueTexts{assemble(feeds.alice.received), assemble(feeds.bob.received),
                                     assemble(feeds.alice.eve), assemble(feeds.bob.eve)};
        return result;
    }

    if (config.threads <= 1) {
        for (uint64_t c = 0; c < chunks; c++) {
            run_chunk(config, c, c * kChunkRounds, chunk_end(c), nullptr, result.summary, nullptr, &sink);
        }
        return result;
    }

    // Batches of chunks run concurrently; output is emitted in chunk order.
    bool keep = static_cast<bool>(sink);
    for (uint64_t first = 0; first < chunks; first += config.threads) {
        uint64_t last = std::min<uint64_t>(chunks, first + config.threads);
        std::vector<RunSummary> partial(last - first);
        std::vector<std::vector<RoundTranscript>> buffers(last - first);
        std::vector<std::thread> workers;
        for (uint64_t c = first; c < last; c++) {
            workers.emplace_back([&, c] {
                size_t slot = c - first;
                run_chunk(config, c, c * kChunkRounds, chunk_end(c), nullptr, partial[slot],
                          keep ? &buffers[slot] : nullptr, nullptr);
            });
        }
        for (auto &w : workers) {
            w.join();
        }
        for (size_t i = 0; i < partial.size(); i++) {
            result.summary += partial[i];
            if (keep) {
                for (const auto &t : buffers[i]) {
                    sink(t);
                }
            }
        }
    }
    return result;
}

std::vector<PauliCode> text_to_codes(std::string_view text) {
    std::vector<PauliCode> codes;
    codes.reserve(text.size() * 4);
    for (char ch : text) {
        auto byte = static_cast<uint8_t>(ch);
        for (int shift = 6; shift >= 0; shift -= 2) {
            codes.push_back(PauliCode::from_index(static_cast<uint8_t>((byte >> shift) & 3)));
        }
    }
    return codes;
}

std::string codes_to_text(std::span<const PauliCode> codes) {
    if (codes.size() % 4 != 0) {
        throw std::invalid_argument("codes_to_text: code count is not a multiple of 4");
    }
    std::string text;
    text.reserve(codes.size() / 4);
    for (size_t i = 0; i < codes.size(); i += 4) {
        uint8_t byte = 0;
        for (size_t j = 0; j < 4; j++) {
            byte = static_cast<uint8_t>((byte << 2) | codes[i + j].index());
        }
        text.push_back(static_cast<char>(byte));
    }
    return text;
}

DialogueResult run_dialogue(const DialogueConfig &config) {
    RunConfig run;
    run.protocol = config.protocol;
    run.strategy = config.strategy;
    run.p_cm = 0.0;
    run.seed = config.seed;
    run.message_source = MessageSource::Text;
    run.alice_text = config.alice_text;
    run.bob_text = config.bob_text;
    run.reveal_outcome = config.reveal_outcome;
    run.rounds = std::max<uint64_t>(1, 4 * std::max(config.alice_text.size(), config.bob_text.size()));
    RunResult r = run_sessions(run);
    return DialogueResult{*r.texts, r.summary};
}

}  // namespace qdialogue
