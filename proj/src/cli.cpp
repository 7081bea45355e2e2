#include "ssc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ssc/analysis.hpp"
#include "ssc/channel.hpp"
#include "ssc/decoder.hpp"
#include "ssc/encoder.hpp"
#include "ssc/errors.hpp"
#include "ssc/sweep.hpp"

namespace ssc::cli {

namespace {

// Bad argument values that CLI11 cannot see (wrong bit widths, unknown
// channel strings). Reported like flag errors: exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Bit> read_bits_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open bits file: " + path);
    std::vector<Bit> bits;
    std::string token;
    while (in >> token) {
        if (token != "0" && token != "1")
            throw std::runtime_error(path + ": token '" + token + "' is not a bit");
        bits.push_back(static_cast<Bit>(token == "1"));
    }
    return bits;
}

std::vector<double> read_reals_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open received file: " + path);
    std::vector<double> values;
    double v = 0.0;
    while (in >> v)
        values.push_back(v);
    if (!in.eof())
        throw std::runtime_error(path + ": malformed real value near entry " +
                                 std::to_string(values.size() + 1));
    return values;
}

BitVector parse_state_arg(const std::string &text, std::size_t m, const char *what) {
    BitVector v;
    try {
        v = BitVector::parse(text);
    } catch (const std::invalid_argument &) {
        throw UsageError(std::string(what) + " '" + text + "' must be a 0/1 string");
    }
    if (v.size() != m)
        throw UsageError(std::string(what) + " '" + text + "' must have " + std::to_string(m) +
                         " bits");
    return v;
}

std::vector<BitVector> to_blocks(const std::vector<Bit> &bits, std::size_t width,
                                 const char *what) {
    if (bits.size() % width != 0)
        throw std::runtime_error(std::string(what) + ": bit count " +
                                 std::to_string(bits.size()) + " is not a multiple of " +
                                 std::to_string(width));
    std::vector<BitVector> blocks(bits.size() / width, BitVector(width));
    for (std::size_t i = 0; i < bits.size(); ++i)
        blocks[i / width].set(i % width, bits[i]);
    return blocks;
}

void print_flat_bits(std::ostream &out, const std::vector<BitVector> &blocks) {
    bool first = true;
    for (const BitVector &block : blocks)
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (!first)
                out << ' ';
            out << static_cast<int>(block[i]);
            first = false;
        }
    out << '\n';
}

void print_matrix(std::ostream &out, const BitMatrix &m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? " " : "") << static_cast<int>(m(r, c));
        out << '\n';
    }
}

std::string chain_string(const std::vector<BitVector> &states) {
    std::string s;
    for (const BitVector &x : states) {
        if (!s.empty())
            s += " -> ";
        s += x.to_string();
    }
    return s;
}

void cmd_table(std::ostream &out, const StateSpaceEncoder &enc) {
    out << "u state next output\n";
    for (const TransitionRow &row : transition_table(enc))
        out << row.u.to_string() << ' ' << row.current_state.to_string() << ' '
            << row.next_state.to_string() << ' ' << row.output.to_string() << '\n';
}

void cmd_analyze(std::ostream &out, const StateSpaceEncoder &enc,
                 const std::vector<std::string> &steer_args, bool per_state_orbits) {
    out << "code: m=" << enc.state_bits() << " k=" << enc.input_bits()
        << " n=" << enc.output_bits() << " rate=" << enc.input_bits() << '/'
        << enc.output_bits() << '\n';

    const ControllabilityReport ctrl = controllability_report(enc);
    out << "controllability matrix:\n";
    print_matrix(out, ctrl.matrix);
    out << "controllability rank: " << ctrl.rank << '\n';
    out << "controllable: " << (ctrl.controllable ? "yes" : "no") << '\n';

    const ObservabilityReport obs = observability_report(enc);
    out << "observability matrix:\n";
    print_matrix(out, obs.matrix);
    out << "observability rank: " << obs.rank << '\n';
    out << "observable: " << (obs.observable ? "yes" : "no") << '\n';

    out << "orbits:\n";
    for (const OrbitClass &cls : all_orbits(enc)) {
        out << "cycle: " << chain_string(cls.cycle);
        if (!cls.transients.empty()) {
            out << " (transients:";
            for (const BitVector &x : cls.transients)
                out << ' ' << x.to_string();
            out << ')';
        }
        out << '\n';
    }

    if (per_state_orbits) {
        const std::size_t m = enc.state_bits();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            const Orbit o = orbit(enc, BitVector::from_index(s, m));
            out << "orbit " << o.start.to_string() << ": ";
            if (!o.transient.empty())
                out << "transient " << chain_string(o.transient) << ", ";
            out << "cycle " << chain_string(o.cycle) << '\n';
        }
    }

    if (!steer_args.empty()) {
        const BitVector from = parse_state_arg(steer_args[0], enc.state_bits(), "steer state");
        const BitVector to = parse_state_arg(steer_args[1], enc.state_bits(), "steer state");
        out << "steer " << from.to_string() << " -> " << to.to_string() << ": ";
        if (auto inputs = steer(enc, from, to)) {
            out << "inputs";
            for (const BitVector &u : *inputs)
                out << ' ' << u.to_string();
            out << " (" << inputs->size() << " steps)\n";
        } else {
            out << "unreachable within horizon " << enc.state_bits() << '\n';
        }
    }
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"state-space convolutional code workbench"};
    app.require_subcommand(1);

    const std::map<std::string, Termination> termination_names{
        {"free", Termination::kFree}, {"zero", Termination::kZero}};
    const std::map<std::string, Decision> decision_names{{"hard", Decision::kHard},
                                                         {"soft", Decision::kSoft}};

    std::string code_path;
    std::string in_path;
    std::string received_path;
    std::string map_name = "identity";
    std::string algo = "bowyer";
    std::string initial_state;
    std::string channel_arg;
    std::vector<std::string> steer_args;
    std::vector<double> grid;
    Termination termination = Termination::kFree;
    Termination sim_termination = Termination::kZero;
    Decision decision = Decision::kHard;
    std::uint64_t trials = 0;
    std::size_t frame_bits = 0;
    std::uint64_t seed = 0;
    bool orbits_flag = false;
    bool uncoded = false;

    auto add_code = [&](CLI::App *cmd) {
        cmd->add_option("--code", code_path, "code definition file (.ssc)")->required();
    };

    CLI::App *table = app.add_subcommand("table", "print the full transition table");
    add_code(table);

    CLI::App *enc_cmd = app.add_subcommand("encode", "encode a bit file");
    add_code(enc_cmd);
    enc_cmd->add_option("--in", in_path, "input bits, whitespace separated")->required();
    enc_cmd->add_option("--initial-state", initial_state, "start state bits (default all zero)");
    enc_cmd->add_option("--terminate", termination, "termination mode")
        ->transform(CLI::CheckedTransformer(termination_names));

    CLI::App *dec_cmd = app.add_subcommand("decode", "decode a received file");
    add_code(dec_cmd);
    dec_cmd->add_option("--received", received_path, "received reals, n per stage")->required();
    dec_cmd->add_option("--map", map_name, "symbol map")
        ->check(CLI::IsMember({"identity", "bpsk"}));
    dec_cmd->add_option("--initial-state", initial_state, "start state bits (default all zero)");
    dec_cmd->add_option("--terminate", termination, "termination mode")
        ->transform(CLI::CheckedTransformer(termination_names));
    dec_cmd->add_option("--algo", algo, "decoding algorithm")
        ->check(CLI::IsMember({"bowyer", "viterbi", "brute"}));

    CLI::App *analyze = app.add_subcommand("analyze", "controllability, observability, orbits");
    add_code(analyze);
    analyze->add_option("--steer", steer_args, "steering FROM TO state bit strings")
        ->expected(2);
    analyze->add_flag("--orbits", orbits_flag, "also list the orbit of every start state");

    CLI::App *simulate = app.add_subcommand("simulate", "Monte-Carlo BER sweep, CSV output");
    add_code(simulate);
    simulate->add_option("--channel", channel_arg, "bsc[:P] or awgn[:DB]")->required();
    simulate->add_option("--grid", grid, "channel parameter values")->delimiter(',');
    simulate->add_option("--trials", trials, "frames per grid point")->required();
    simulate->add_option("--frame-bits", frame_bits, "information bits per frame")->required();
    simulate->add_option("--seed", seed, "master RNG seed");
    simulate->add_option("--decision", decision, "hard or soft decision decoding")
        ->required()
        ->transform(CLI::CheckedTransformer(decision_names));
    simulate->add_flag("--uncoded", uncoded, "channel pass-through baseline (no code)");
    simulate->add_option("--terminate", sim_termination, "frame termination mode")
        ->transform(CLI::CheckedTransformer(termination_names));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        const StateSpaceEncoder enc = load_code_file(code_path);
        const std::size_t m = enc.state_bits();
        const BitVector x0 = initial_state.empty()
                                 ? BitVector(m)
                                 : parse_state_arg(initial_state, m, "initial state");

        if (app.got_subcommand(table)) {
            cmd_table(out, enc);
        } else if (app.got_subcommand(enc_cmd)) {
            const auto blocks = to_blocks(read_bits_file(in_path), enc.input_bits(), in_path.c_str());
            print_flat_bits(out, encode(enc, blocks, x0, termination).codeword);
        } else if (app.got_subcommand(dec_cmd)) {
            const SymbolMap map =
                map_name == "bpsk" ? SymbolMap::bpsk() : SymbolMap::identity();
            const DecodeProblem problem =
                make_problem(enc, read_reals_file(received_path), map, x0, termination);
            DecodeResult result;
            if (algo == "viterbi")
                result = viterbi_forward(enc, problem);
            else if (algo == "brute")
                result = brute_force_ml(enc, problem);
            else
                result = decode(enc, problem);
            print_flat_bits(out, result.inputs);
        } else if (app.got_subcommand(analyze)) {
            cmd_analyze(out, enc, steer_args, orbits_flag);
        } else if (app.got_subcommand(simulate)) {
            SweepConfig config;
            std::string kind = channel_arg;
            std::optional<double> inline_value;
            if (auto colon = channel_arg.find(':'); colon != std::string::npos) {
                kind = channel_arg.substr(0, colon);
                try {
                    inline_value = std::stod(channel_arg.substr(colon + 1));
                } catch (const std::exception &) {
                    throw UsageError("channel parameter in '" + channel_arg +
                                     "' is not a number");
                }
            }
            if (kind == "bsc")
                config.channel = ChannelSpec::Kind::kBsc;
            else if (kind == "awgn")
                config.channel = ChannelSpec::Kind::kAwgn;
            else
                throw UsageError("unknown channel '" + kind + "', expected bsc or awgn");
            config.grid = grid;
            if (config.grid.empty()) {
                if (!inline_value)
                    throw UsageError("no channel parameter: pass --grid or use kind:value");
                config.grid = {*inline_value};
            }
            config.trials = trials;
            config.frame_bits = frame_bits;
            config.seed = seed;
            config.decision = decision;
            config.uncoded = uncoded;
            config.termination = sim_termination;
            write_csv(out, ber_sweep(enc, config));
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

} // namespace ssc::cli
