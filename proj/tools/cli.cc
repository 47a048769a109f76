#include "cli.h"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "qdialogue/harness.h"
#include "qdialogue/oracle.h"
#include "qdialogue/serialize.h"

namespace qdialogue::cli {

namespace {

const std::vector<std::string> kProtocols = {"original", "modified"};
const std::vector<std::string> kAttacks = {"none", "disturbance", "measure-resend", "bell-substitution"};
const std::vector<std::string> kFormats = {"text", "csv", "records"};

struct Flags {
    std::string protocol = "original";
    std::string attack = "none";
    uint64_t rounds = 1000;
    double p_cm = 0.5;
    uint64_t seed = 0;
    std::string output;
    std::string format = "text";
    std::string alice_text;
    std::string bob_text;
    bool suppress_outcome_reveal = false;
};

void add_protocol_flags(CLI::App *cmd, Flags &f) {
    cmd->add_option("--protocol", f.protocol, "original | modified")->check(CLI::IsMember(kProtocols));
    cmd->add_option("--attack", f.attack, "none | disturbance | measure-resend | bell-substitution")
        ->check(CLI::IsMember(kAttacks));
}

std::string quoted(const std::optional<std::string> &s) {
    if (!s) {
        return "(nothing recovered)";
    }
    return Json(*s).dump();
}

int cmd_run(const Flags &f, std::ostream &out, std::ostream &err) {
    RunConfig config;
    config.protocol = *parse_protocol(f.protocol);
    config.strategy = *parse_strategy(f.attack);
    config.rounds = f.rounds;
    config.p_cm = f.p_cm;
    config.seed = f.seed;
    try {
        config.validate();
    } catch (const ConfigError &e) {
        err << "error: --" << e.field() << ": " << e.what() << '\n';
        return kExitUsage;
    }
    OutputFormat format = *parse_format(f.format);

    std::ofstream transcripts;
    if (!f.output.empty()) {
        transcripts.open(f.output, std::ios::binary | std::ios::trunc);
        if (!transcripts) {
            err << "error: cannot open " << f.output << " for writing\n";
            return kExitIo;
        }
    }

    try {
        TranscriptSink sink;
        if (transcripts.is_open()) {
            sink = [&](const RoundTranscript &t) { write_transcript(transcripts, t); };
        }
        RunResult result = run_sessions(config, sink);
        if (transcripts.is_open()) {
            transcripts.flush();
            if (!transcripts) {
                throw IoError("flushing " + f.output + " failed");
            }
        }
        if (format == OutputFormat::Text) {
            out << "protocol: " << f.protocol << "\nattack:   " << f.attack << "\nrounds:   " << f.rounds
                << "\np_cm:     " << f.p_cm << "\nseed:     " << f.seed << "\n\n";
        }
        write_summary(out, result.summary, format);
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_oracle(const Flags &f, std::ostream &out, std::ostream &err) {
    OracleResult r = exact_oracle(*parse_protocol(f.protocol), *parse_strategy(f.attack));
    try {
        write_oracle(out, r, *parse_format(f.format));
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

int cmd_dialogue(const Flags &f, std::ostream &out, std::ostream &err) {
    DialogueConfig config;
    config.alice_text = f.alice_text;
    config.bob_text = f.bob_text;
    config.protocol = *parse_protocol(f.protocol);
    config.strategy = *parse_strategy(f.attack);
    config.seed = f.seed;
    config.reveal_outcome = !f.suppress_outcome_reveal;
    DialogueResult r = run_dialogue(config);

    if (*parse_format(f.format) == OutputFormat::Records) {
        auto field = [](const std::optional<std::string> &s) { return s ? Json(*s) : Json(nullptr); };
        Json j;
        j["bob_received_alice_text"] = field(r.texts.bob_received);
        j["alice_received_bob_text"] = field(r.texts.alice_received);
        j["eve_alice_text"] = field(r.texts.eve_alice);
        j["eve_bob_text"] = field(r.texts.eve_bob);
        j["summary"] = summary_to_json(r.summary);
        out << j.dump() << '\n';
    } else {
        out << "Bob received Alice's text:   " << quoted(r.texts.bob_received) << '\n'
            << "Alice received Bob's text:   " << quoted(r.texts.alice_received) << '\n'
            << "Eve's copy of Alice's text:  " << quoted(r.texts.eve_alice) << '\n'
            << "Eve's copy of Bob's text:    " << quoted(r.texts.eve_bob) << '\n';
    }
    if (!out) {
        err << "error: write to output failed\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum dialogue protocol simulator", "qdialogue"};
    app.require_subcommand(1);
    Flags f;

    CLI::App *run = app.add_subcommand("run", "Monte Carlo run of many protocol rounds");
    add_protocol_flags(run, f);
    run->add_option("--rounds", f.rounds, "number of rounds (>= 1)");
    run->add_option("--p-cm", f.p_cm, "probability that a party picks checking mode");
    run->add_option("--seed", f.seed, "master random seed");
    run->add_option("--output", f.output, "write round transcripts (one JSON record per line) to this file");
    run->add_option("--format", f.format, "summary format: text | csv | records")->check(CLI::IsMember(kFormats));

    CLI::App *oracle = app.add_subcommand("oracle", "Exact branch enumeration of a protocol/attack pair");
    add_protocol_flags(oracle, f);
    oracle->add_option("--format", f.format, "text | csv | records")->check(CLI::IsMember(kFormats));

    CLI::App *dialogue = app.add_subcommand("dialogue", "Exchange two texts in message mode");
    add_protocol_flags(dialogue, f);
    dialogue->add_option("--alice-text", f.alice_text, "Alice's message")->required();
    dialogue->add_option("--bob-text", f.bob_text, "Bob's message")->required();
    dialogue->add_option("--seed", f.seed, "master random seed");
    dialogue->add_flag("--suppress-outcome-reveal", f.suppress_outcome_reveal,
                       "Bob keeps his Bell outcome private in message rounds");
    dialogue->add_option("--format", f.format, "text | records")->check(CLI::IsMember({"text", "records"}));

    std::vector<const char *> argv{"qdialogue"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (run->parsed()) {
        return cmd_run(f, out, err);
    }
    if (oracle->parsed()) {
        return cmd_oracle(f, out, err);
    }
    return cmd_dialogue(f, out, err);
}

}  // namespace qdialogue::cli
