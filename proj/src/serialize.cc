#include "qdialogue/serialize.h"

#include <cstdio>
#include <ostream>

namespace qdialogue {

namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw std::invalid_argument("transcript record: " + what);
}

std::pair<bool, bool> parse_bits(const Json &j, const char *field) {
    if (!j.is_string()) {
        schema_error(std::string(field) + " is not a string");
    }
    const auto &s = j.get_ref<const std::string &>();
    if (s.size() != 2 || (s[0] != '0' && s[0] != '1') || (s[1] != '0' && s[1] != '1')) {
        schema_error(std::string(field) + " is not a two-bit string");
    }
    return {s[0] == '1', s[1] == '1'};
}

PauliCode parse_code(const Json &j, const char *field) {
    auto [k, l] = parse_bits(j, field);
    return PauliCode{k, l};
}

BellIndex parse_outcome(const Json &j, const char *field) {
    auto [x, y] = parse_bits(j, field);
    return BellIndex{x, y};
}

Json code_or_null(const std::optional<PauliCode> &c) { return c ? Json(c->str()) : Json(nullptr); }

std::optional<PauliCode> optional_code(const Json &j, const char *field) {
    if (j.is_null()) {
        return std::nullopt;
    }
    return parse_code(j, field);
}

const Json &member(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        schema_error(std::string("missing field ") + key);
    }
    return j.at(key);
}

template <typename T, typename Parse>
T parse_enum(const Json &j, const char *field, Parse parse) {
    if (!j.is_string()) {
        schema_error(std::string(field) + " is not a string");
    }
    auto v = parse(j.get<std::string>());
    if (!v) {
        schema_error(std::string("unknown ") + field + " value");
    }
    return *v;
}

Json announcement_to_json(const Announcement &a) {
    Json j;
    j["speaker"] = std::string(to_string(a.speaker()));
    j["kind"] = std::string(to_string(a.kind()));
    switch (a.kind()) {
        case AnnouncementKind::ReceiptAck:
            break;
        case AnnouncementKind::ModeReveal:
            j["mode"] = std::string(to_string(a.mode()));
            break;
        case AnnouncementKind::OutcomeReveal:
            j["outcome"] = a.outcome().str();
            break;
        case AnnouncementKind::OpReveal:
            j["code"] = a.code().str();
            break;
    }
    return j;
}

Announcement announcement_from_json(const Json &j) {
    Party speaker = parse_enum<Party>(member(j, "speaker"), "speaker", parse_party);
    auto kind = parse_enum<AnnouncementKind>(member(j, "kind"), "kind", parse_announcement_kind);
    size_t expected_size = kind == AnnouncementKind::ReceiptAck ? 2 : 3;
    if (j.size() != expected_size) {
        schema_error("announcement payload does not match its kind");
    }
    switch (kind) {
        case AnnouncementKind::ReceiptAck:
            return Announcement::receipt_ack(speaker);
        case AnnouncementKind::ModeReveal:
            return Announcement::mode_reveal(speaker, parse_enum<Mode>(member(j, "mode"), "mode", parse_mode));
        case AnnouncementKind::OutcomeReveal:
            return Announcement::outcome_reveal(speaker, parse_outcome(member(j, "outcome"), "outcome"));
        case AnnouncementKind::OpReveal:
            return Announcement::op_reveal(speaker, parse_code(member(j, "code"), "code"));
    }
    schema_error("unknown announcement kind");
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string rate_text(const std::optional<double> &r) { return r ? fixed(*r) : "n/a"; }

Json rate_json(const std::optional<double> &r) { return r ? Json(*r) : Json(nullptr); }

std::string fraction_text(const std::optional<Fraction> &f) {
    if (!f) {
        return "n/a";
    }
    return to_string(*f) + " (" + fixed(to_double(*f)) + ")";
}

Json fraction_json(const std::optional<Fraction> &f) {
    if (!f) {
        return nullptr;
    }
    Json j;
    j["exact"] = to_string(*f);
    j["decimal"] = to_double(*f);
    return j;
}

void check_stream(const std::ostream &out) {
    if (!out) {
        throw IoError("write to output failed");
    }
}

}  // namespace

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text:
            return "text";
        case OutputFormat::Csv:
            return "csv";
        case OutputFormat::Records:
            return "records";
    }
    return "?";
}

std::optional<OutputFormat> parse_format(std::string_view s) {
    for (auto f : {OutputFormat::Text, OutputFormat::Csv, OutputFormat::Records}) {
        if (to_string(f) == s) {
            return f;
        }
    }
    return std::nullopt;
}

Json transcript_to_json(const RoundTranscript &t) {
    Json j;
    j["round_id"] = t.round_id;
    j["protocol"] = std::string(to_string(t.protocol));
    j["modes"] = {{"bob", std::string(to_string(t.bob_mode))}, {"alice", std::string(to_string(t.alice_mode))}};
    j["codes"] = {{"bob", t.bob_code.str()}, {"alice", t.alice_code.str()}};
    j["outcome"] = t.outcome.str();
    Json announcements = Json::array();
    for (const auto &a : t.announcements) {
        announcements.push_back(announcement_to_json(a));
    }
    j["announcements"] = std::move(announcements);
    j["check"] = {{"check_performed", t.check_performed},
                  {"check_passed", t.check_passed ? Json(*t.check_passed) : Json(nullptr)}};
    j["decoded"] = {{"bob", code_or_null(t.bob_decoded)}, {"alice", code_or_null(t.alice_decoded)}};
    if (t.eve_report) {
        j["eve"] = {{"inferred_alice", code_or_null(t.eve_report->inferred_alice)},
                    {"inferred_bob_private", code_or_null(t.eve_report->inferred_bob_private)},
                    {"inferred_bob_public", code_or_null(t.eve_report->inferred_bob_public)}};
    } else {
        j["eve"] = nullptr;
    }
    return j;
}

RoundTranscript transcript_from_json(const Json &j) {
    RoundTranscript t;
    const Json &id = member(j, "round_id");
    if (!id.is_number_unsigned()) {
        schema_error("round_id is not an unsigned integer");
    }
    t.round_id = id.get<uint64_t>();
    t.protocol = parse_enum<ProtocolKind>(member(j, "protocol"), "protocol", parse_protocol);
    const Json &modes = member(j, "modes");
    t.bob_mode = parse_enum<Mode>(member(modes, "bob"), "mode", parse_mode);
    t.alice_mode = parse_enum<Mode>(member(modes, "alice"), "mode", parse_mode);
    const Json &codes = member(j, "codes");
    t.bob_code = parse_code(member(codes, "bob"), "codes.bob");
    t.alice_code = parse_code(member(codes, "alice"), "codes.alice");
    t.outcome = parse_outcome(member(j, "outcome"), "outcome");

    const Json &announcements = member(j, "announcements");
    if (!announcements.is_array()) {
        schema_error("announcements is not an array");
    }
    for (const auto &a : announcements) {
        t.announcements.push_back(announcement_from_json(a));
    }

    const Json &check = member(j, "check");
    const Json &performed = member(check, "check_performed");
    const Json &passed = member(check, "check_passed");
    if (!performed.is_boolean()) {
        schema_error("check_performed is not a boolean");
    }
    t.check_performed = performed.get<bool>();
    if (t.check_performed != passed.is_boolean() || (!passed.is_boolean() && !passed.is_null())) {
        schema_error("check_passed must be a boolean exactly when check_performed");
    }
    if (passed.is_boolean()) {
        t.check_passed = passed.get<bool>();
    }

    const Json &decoded = member(j, "decoded");
    t.bob_decoded = optional_code(member(decoded, "bob"), "decoded.bob");
    t.alice_decoded = optional_code(member(decoded, "alice"), "decoded.alice");

    const Json &eve = member(j, "eve");
    if (!eve.is_null()) {
        EveReport r;
        r.inferred_alice = optional_code(member(eve, "inferred_alice"), "eve.inferred_alice");
        r.inferred_bob_private = optional_code(member(eve, "inferred_bob_private"), "eve.inferred_bob_private");
        r.inferred_bob_public = optional_code(member(eve, "inferred_bob_public"), "eve.inferred_bob_public");
        t.eve_report = r;
    }
    return t;
}

std::string transcript_to_line(const RoundTranscript &t) { return transcript_to_json(t).dump(); }

RoundTranscript transcript_from_line(std::string_view line) {
    Json j = Json::parse(line, nullptr, false);
    if (j.is_discarded()) {
        throw std::invalid_argument("transcript record: not valid JSON");
    }
    return transcript_from_json(j);
}

void write_transcript(std::ostream &out, const RoundTranscript &t) {
    out << transcript_to_line(t) << '\n';
    check_stream(out);
}

void write_transcripts(std::ostream &out, std::span<const RoundTranscript> transcripts) {
    for (const auto &t : transcripts) {
        write_transcript(out, t);
    }
}

std::string summary_csv_header() {
    return "rounds_total,rounds_cm,rounds_mm,rounds_alice_cm_bob_mm,rounds_alice_mm_bob_cm,checks_failed,"
           "detection_rate,alice_decodes,alice_decodes_correct,alice_decode_accuracy,bob_decodes,"
           "bob_decodes_correct,bob_decode_accuracy,eve_alice_inferences,eve_alice_correct,eve_alice_accuracy,"
           "eve_bob_public_inferences,eve_bob_public_correct,eve_bob_public_accuracy,throughput_bits";
}

Json summary_to_json(const RunSummary &s) {
    Json j;
    j["rounds_total"] = s.rounds_total;
    j["rounds_cm"] = s.rounds_cm;
    j["rounds_mm"] = s.rounds_mm;
    j["rounds_alice_cm_bob_mm"] = s.rounds_alice_cm_bob_mm;
    j["rounds_alice_mm_bob_cm"] = s.rounds_alice_mm_bob_cm;
    j["checks_failed"] = s.checks_failed;
    j["detection_rate"] = rate_json(s.detection_rate());
    j["alice_decodes"] = s.alice_decodes;
    j["alice_decodes_correct"] = s.alice_decodes_correct;
    j["alice_decode_accuracy"] = rate_json(s.alice_decode_accuracy());
    j["bob_decodes"] = s.bob_decodes;
    j["bob_decodes_correct"] = s.bob_decodes_correct;
    j["bob_decode_accuracy"] = rate_json(s.bob_decode_accuracy());
    j["eve_alice_inferences"] = s.eve_alice_inferences;
    j["eve_alice_correct"] = s.eve_alice_correct;
    j["eve_alice_accuracy"] = rate_json(s.eve_alice_accuracy());
    j["eve_bob_public_inferences"] = s.eve_bob_public_inferences;
    j["eve_bob_public_correct"] = s.eve_bob_public_correct;
    j["eve_bob_public_accuracy"] = rate_json(s.eve_bob_public_accuracy());
    j["throughput_bits"] = s.throughput_bits;
    return j;
}

RunSummary summary_from_json(const Json &j) {
    auto count = [&](const char *key) {
        const Json &v = member(j, key);
        if (!v.is_number_unsigned()) {
            schema_error(std::string(key) + " is not an unsigned integer");
        }
        return v.get<uint64_t>();
    };
    RunSummary s;
    s.rounds_total = count("rounds_total");
    s.rounds_cm = count("rounds_cm");
    s.rounds_mm = count("rounds_mm");
    s.rounds_alice_cm_bob_mm = count("rounds_alice_cm_bob_mm");
    s.rounds_alice_mm_bob_cm = count("rounds_alice_mm_bob_cm");
    s.checks_failed = count("checks_failed");
    s.alice_decodes = count("alice_decodes");
    s.alice_decodes_correct = count("alice_decodes_correct");
    s.bob_decodes = count("bob_decodes");
    s.bob_decodes_correct = count("bob_decodes_correct");
    s.eve_alice_inferences = count("eve_alice_inferences");
    s.eve_alice_correct = count("eve_alice_correct");
    s.eve_bob_public_inferences = count("eve_bob_public_inferences");
    s.eve_bob_public_correct = count("eve_bob_public_correct");
    s.throughput_bits = count("throughput_bits");
    return s;
}

void write_summary(std::ostream &out, const RunSummary &s, OutputFormat format) {
    switch (format) {
        case OutputFormat::Records:
            out << summary_to_json(s).dump() << '\n';
            break;
        case OutputFormat::Csv: {
            auto cell = [](const std::optional<double> &r) { return r ? fixed(*r) : std::string(); };
            out << summary_csv_header() << '\n'
                << s.rounds_total << ',' << s.rounds_cm << ',' << s.rounds_mm << ',' << s.rounds_alice_cm_bob_mm
                << ',' << s.rounds_alice_mm_bob_cm << ',' << s.checks_failed << ',' << cell(s.detection_rate())
                << ',' << s.alice_decodes << ',' << s.alice_decodes_correct << ','
                << cell(s.alice_decode_accuracy()) << ',' << s.bob_decodes << ',' << s.bob_decodes_correct << ','
                << cell(s.bob_decode_accuracy()) << ',' << s.eve_alice_inferences << ',' << s.eve_alice_correct
                << ',' << cell(s.eve_alice_accuracy()) << ',' << s.eve_bob_public_inferences << ','
                << s.eve_bob_public_correct << ',' << cell(s.eve_bob_public_accuracy()) << ',' << s.throughput_bits
                << '\n';
            break;
        }
        case OutputFormat::Text:
            out << "detection_rate:          " << rate_text(s.detection_rate()) << "  (" << s.checks_failed << " of "
                << s.rounds_cm << " checks failed)\n"
                << "rounds_total:            " << s.rounds_total << '\n'
                << "rounds_cm:               " << s.rounds_cm << '\n'
                << "rounds_mm:               " << s.rounds_mm << '\n'
                << "rounds_alice_cm_bob_mm:  " << s.rounds_alice_cm_bob_mm << '\n'
                << "rounds_alice_mm_bob_cm:  " << s.rounds_alice_mm_bob_cm << '\n'
                << "alice_decode_accuracy:   " << rate_text(s.alice_decode_accuracy()) << '\n'
                << "bob_decode_accuracy:     " << rate_text(s.bob_decode_accuracy()) << '\n'
                << "eve_alice_accuracy:      " << rate_text(s.eve_alice_accuracy()) << '\n'
                << "eve_bob_public_accuracy: " << rate_text(s.eve_bob_public_accuracy()) << '\n'
                << "throughput_bits:         " << s.throughput_bits << '\n';
            break;
    }
    check_stream(out);
}

Json oracle_to_json(const OracleResult &r) {
    Json j;
    j["protocol"] = std::string(to_string(r.protocol));
    j["attack"] = std::string(to_string(r.strategy));
    j["branches"] = r.branches;
    j["check_pass_probability"] = fraction_json(r.check_pass_probability);
    j["detection_probability"] = fraction_json(r.detection_probability);
    j["eve_alice_accuracy"] = fraction_json(r.eve_alice_accuracy);
    j["eve_bob_public_accuracy"] = fraction_json(r.eve_bob_public_accuracy);
    j["alice_decode_accuracy"] = fraction_json(r.alice_decode_accuracy);
    j["bob_decode_accuracy"] = fraction_json(r.bob_decode_accuracy);
    Json dist = Json::array();
    for (uint8_t b = 0; b < 4; b++) {
        for (uint8_t a = 0; a < 4; a++) {
            Json row;
            row["bob"] = PauliCode::from_index(b).str();
            row["alice"] = PauliCode::from_index(a).str();
            Json probs;
            for (uint8_t o = 0; o < 4; o++) {
                probs[BellIndex::from_index(o).str()] = to_string(r.outcome_distribution[b][a][o]);
            }
            row["outcomes"] = std::move(probs);
            dist.push_back(std::move(row));
        }
    }
    j["outcome_distribution"] = std::move(dist);
    return j;
}

void write_oracle(std::ostream &out, const OracleResult &r, OutputFormat format) {
    switch (format) {
        case OutputFormat::Records:
            out << oracle_to_json(r).dump() << '\n';
            break;
        case OutputFormat::Csv: {
            auto cell = [](const std::optional<Fraction> &f) { return f ? to_string(*f) : std::string(); };
            out << "protocol,attack,check_pass_probability,detection_probability,eve_alice_accuracy,"
                   "eve_bob_public_accuracy,alice_decode_accuracy,bob_decode_accuracy\n"
                << to_string(r.protocol) << ',' << to_string(r.strategy) << ','
                << cell(r.check_pass_probability) << ',' << cell(r.detection_probability) << ','
                << cell(r.eve_alice_accuracy) << ',' << cell(r.eve_bob_public_accuracy) << ','
                << cell(r.alice_decode_accuracy) << ',' << cell(r.bob_decode_accuracy) << '\n';
            break;
        }
        case OutputFormat::Text:
            out << "protocol:                " << to_string(r.protocol) << '\n'
                << "attack:                  " << to_string(r.strategy) << '\n'
                << "branches:                " << r.branches << '\n'
                << "check_pass_probability:  " << fraction_text(r.check_pass_probability) << '\n'
                << "detection_probability:   " << fraction_text(r.detection_probability) << '\n'
                << "eve_alice_accuracy:      " << fraction_text(r.eve_alice_accuracy) << '\n'
                << "eve_bob_public_accuracy: " << fraction_text(r.eve_bob_public_accuracy) << '\n'
                << "alice_decode_accuracy:   " << fraction_text(r.alice_decode_accuracy) << '\n'
                << "bob_decode_accuracy:     " << fraction_text(r.bob_decode_accuracy) << '\n'
                << "outcome distribution (bob code, alice code -> P(00) P(01) P(10) P(11)):\n";
            for (uint8_t b = 0; b < 4; b++) {
                for (uint8_t a = 0; a < 4; a++) {
                    out << "  " << PauliCode::from_index(b).str() << ' ' << PauliCode::from_index(a).str() << " ->";
                    for (uint8_t o = 0; o < 4; o++) {
                        out << ' ' << to_string(r.outcome_distribution[b][a][o]);
                    }
                    out << '\n';
                }
            }
            break;
    }
    check_stream(out);
}

}  // namespace qdialogue
