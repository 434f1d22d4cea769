// rbcsim: multi-user resonant-beam charging scheduler simulator.
//
// Subcommands:
//   simulate      one seeded run, per-slot trace CSV
//   sweep         trial-averaged grids over receiver count x time or power
//   validate-fit  score the built-in preferred-power fits against the
//                 synthesized charging profile
//   profile       emit the synthesized CC-CV charging profile as CSV

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rbc/config.hpp"
#include "rbc/csv.hpp"
#include "rbc/errors.hpp"
#include "rbc/harness.hpp"
#include "rbc/link.hpp"
#include "rbc/scheduler.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitValidationFailure = 3;

struct Options {
    std::string config_path;
    std::string out_path;
    bool gnuplot = false;

    std::uint64_t seed = 1;
    int trials = 200;
    int threads = 0;
    std::string variant = "r44";
    std::string termination = "continue";
    std::string kind = "time";

    int receivers = 10;
    double power = 20.0;
    double hours = 3.0;
    double slot_seconds = 10.0;
    std::string initial_soc;    // comma list; empty = uniform random
    std::string forced_status = "none";

    double eta_el = 0.40;
    double eta_lt = 1.00;
    double eta_le = 0.50;
    double delivery_efficiency = -1.0;  // <0: derive from eta_lt * eta_le
    bool no_partial_rotation = false;

    std::string checkpoints = "1,2,3";
    std::string receiver_counts = "10,15,20,25,30,35,40,45,50";
    std::string powers = "20,40,60,80,100";

    rbc::ProfileParams profile;
};

std::vector<rbc::FitVariant> parse_variants(const std::string& name) {
    if (name == "r44") return {rbc::FitVariant::R44};
    if (name == "r45") return {rbc::FitVariant::R45};
    if (name == "both") return {rbc::FitVariant::R44, rbc::FitVariant::R45};
    throw rbc::ConfigError("unknown variant '" + name + "' (r44|r45|both)");
}

rbc::TerminationMode parse_termination(const std::string& name) {
    if (name == "strict") return rbc::TerminationMode::Strict;
    if (name == "continue") return rbc::TerminationMode::Continue;
    throw rbc::ConfigError("unknown termination '" + name + "' (strict|continue)");
}

std::optional<rbc::WorkingStatus> parse_forced_status(const std::string& name) {
    if (name == "none" || name.empty()) return std::nullopt;
    for (auto status : rbc::kAllStatuses) {
        if (rbc::status_name(status) == name) return status;
    }
    throw rbc::ConfigError("unknown working status '" + name + "'");
}

double effective_delivery(const Options& opt) {
    return opt.delivery_efficiency >= 0.0 ? opt.delivery_efficiency
                                          : opt.eta_lt * opt.eta_le;
}

rbc::SchedulerConfig scheduler_config(const Options& opt) {
    rbc::SchedulerConfig config;
    config.transmit_power_w = opt.power;
    config.receiver_count = opt.receivers;
    config.slot_seconds = opt.slot_seconds;
    config.time_limit_hours = opt.hours;
    config.termination = parse_termination(opt.termination);
    config.delivery_efficiency = effective_delivery(opt);
    config.forced_status = parse_forced_status(opt.forced_status);
    config.partial_service_rotates = !opt.no_partial_rotation;
    if (!opt.initial_soc.empty()) {
        config.initial_soc = rbc::parse_double_list(opt.initial_soc);
    }
    return config;
}

rbc::SweepConfig sweep_config(const Options& opt) {
    rbc::SweepConfig config;
    config.base = scheduler_config(opt);
    config.variants = parse_variants(opt.variant);
    config.trials = opt.trials;
    config.master_seed = opt.seed;
    config.threads = opt.threads;
    config.checkpoints_hours = rbc::parse_double_list(opt.checkpoints);
    config.transmit_powers = rbc::parse_double_list(opt.powers);
    config.receiver_counts.clear();
    for (double v : rbc::parse_double_list(opt.receiver_counts)) {
        config.receiver_counts.push_back(static_cast<int>(v));
    }
    return config;
}

void emit(const Options& opt, const std::function<void(std::ostream&)>& writer) {
    if (opt.out_path.empty()) {
        writer(std::cout);
    } else {
        rbc::write_file(opt.out_path, writer);
    }
}

void maybe_emit_gnuplot(const Options& opt, const std::string& script) {
    if (!opt.gnuplot) return;
    if (opt.out_path.empty()) {
        throw rbc::ConfigError("--gnuplot needs --out so the script can "
                               "reference the CSV file");
    }
    rbc::write_file(opt.out_path + ".gp",
                    [&](std::ostream& out) { out << script; });
}

int run_simulate(const Options& opt) {
    const auto variants = parse_variants(opt.variant);
    if (variants.size() != 1) {
        throw rbc::ConfigError("simulate runs a single variant (r44 or r45)");
    }
    rbc::SchedulerConfig config = scheduler_config(opt);
    config.variant = variants.front();
    const rbc::Trace trace = rbc::run_simulation(config, opt.seed);
    emit(opt, [&](std::ostream& out) { rbc::write_trace_csv(out, trace); });
    maybe_emit_gnuplot(opt, rbc::gnuplot_trace(opt.out_path, config.receiver_count));
    return kExitOk;
}

int run_sweep(const Options& opt) {
    const rbc::SweepConfig config = sweep_config(opt);
    if (opt.kind == "time") {
        const auto rows = rbc::time_sweep(config);
        emit(opt, [&](std::ostream& out) { rbc::write_time_sweep_csv(out, rows); });
        maybe_emit_gnuplot(
            opt, rbc::gnuplot_time_sweep(opt.out_path, config.checkpoints_hours));
    } else if (opt.kind == "power") {
        const auto rows = rbc::power_sweep(config);
        emit(opt, [&](std::ostream& out) { rbc::write_power_sweep_csv(out, rows); });
        maybe_emit_gnuplot(
            opt, rbc::gnuplot_power_sweep(opt.out_path, config.transmit_powers));
    } else {
        throw rbc::ConfigError("unknown sweep kind '" + opt.kind + "' (time|power)");
    }
    return kExitOk;
}

int run_validate(const Options& opt) {
    const auto report = rbc::validate_fits(rbc::BatterySpec{}, opt.profile);
    const std::string text = rbc::format_validation_report(report);
    emit(opt, [&](std::ostream& out) { out << text; });
    return report.overall == "fail" ? kExitValidationFailure : kExitOk;
}

int run_profile(const Options& opt) {
    const auto profile = rbc::synthesize_cc_cv_profile(rbc::BatterySpec{}, opt.profile);
    emit(opt, [&](std::ostream& out) { rbc::write_profile_csv(out, profile); });
    maybe_emit_gnuplot(opt, rbc::gnuplot_profile(opt.out_path));
    return kExitOk;
}

// Config-file values fill in every option the command line left untouched.
void apply_config_file(const CLI::App& app, Options& opt) {
    if (opt.config_path.empty()) return;
    const rbc::KeyValues kv = rbc::load_config_file(opt.config_path);
    rbc::require_known_keys(
        kv, {"seed", "trials", "threads", "variant", "termination", "receivers",
             "power", "hours", "slot_seconds", "initial_soc", "forced_status",
             "eta_el", "eta_lt", "eta_le", "delivery_efficiency",
             "partial_rotation", "checkpoints", "receiver_counts", "powers",
             "tc_hours", "cc_hours", "cv_hours", "profile_step",
             "trickle_current", "initial_voltage", "termination_current"});

    const auto untouched = [&](const std::string& flag) {
        return app.count(flag) == 0;
    };
    if (untouched("--seed")) opt.seed = rbc::get_u64(kv, "seed", opt.seed);
    if (untouched("--trials")) opt.trials = rbc::get_int(kv, "trials", opt.trials);
    if (untouched("--threads")) opt.threads = rbc::get_int(kv, "threads", opt.threads);
    if (untouched("--variant")) opt.variant = rbc::get_string(kv, "variant", opt.variant);
    if (untouched("--termination")) {
        opt.termination = rbc::get_string(kv, "termination", opt.termination);
    }
    if (untouched("--receivers")) opt.receivers = rbc::get_int(kv, "receivers", opt.receivers);
    if (untouched("--power")) opt.power = rbc::get_double(kv, "power", opt.power);
    if (untouched("--hours")) opt.hours = rbc::get_double(kv, "hours", opt.hours);
    if (untouched("--slot-seconds")) {
        opt.slot_seconds = rbc::get_double(kv, "slot_seconds", opt.slot_seconds);
    }
    if (untouched("--initial-soc")) {
        opt.initial_soc = rbc::get_string(kv, "initial_soc", opt.initial_soc);
    }
    if (untouched("--forced-status")) {
        opt.forced_status = rbc::get_string(kv, "forced_status", opt.forced_status);
    }
    if (untouched("--eta-el")) opt.eta_el = rbc::get_double(kv, "eta_el", opt.eta_el);
    if (untouched("--eta-lt")) opt.eta_lt = rbc::get_double(kv, "eta_lt", opt.eta_lt);
    if (untouched("--eta-le")) opt.eta_le = rbc::get_double(kv, "eta_le", opt.eta_le);
    if (untouched("--delivery-efficiency")) {
        opt.delivery_efficiency =
            rbc::get_double(kv, "delivery_efficiency", opt.delivery_efficiency);
    }
    if (untouched("--no-partial-rotation") && rbc::has_key(kv, "partial_rotation")) {
        opt.no_partial_rotation = !rbc::get_bool(kv, "partial_rotation", true);
    }
    if (untouched("--checkpoints")) {
        opt.checkpoints = rbc::get_string(kv, "checkpoints", opt.checkpoints);
    }
    if (untouched("--receiver-counts")) {
        opt.receiver_counts = rbc::get_string(kv, "receiver_counts", opt.receiver_counts);
    }
    if (untouched("--powers")) opt.powers = rbc::get_string(kv, "powers", opt.powers);
    if (untouched("--tc-hours")) {
        opt.profile.tc_hours = rbc::get_double(kv, "tc_hours", opt.profile.tc_hours);
    }
    if (untouched("--cc-hours")) {
        opt.profile.cc_hours = rbc::get_double(kv, "cc_hours", opt.profile.cc_hours);
    }
    if (untouched("--cv-hours")) {
        opt.profile.cv_hours = rbc::get_double(kv, "cv_hours", opt.profile.cv_hours);
    }
    if (untouched("--profile-step")) {
        opt.profile.sample_step_hours =
            rbc::get_double(kv, "profile_step", opt.profile.sample_step_hours);
    }
    if (untouched("--trickle-current")) {
        opt.profile.trickle_current =
            rbc::get_double(kv, "trickle_current", opt.profile.trickle_current);
    }
    if (untouched("--initial-voltage")) {
        opt.profile.initial_voltage =
            rbc::get_double(kv, "initial_voltage", opt.profile.initial_voltage);
    }
    if (untouched("--termination-current")) {
        opt.profile.termination_current =
            rbc::get_double(kv, "termination_current", opt.profile.termination_current);
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Multi-user resonant-beam charging scheduler simulator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    app.add_option("--config", opt.config_path,
                   "Flat key = value config file; command-line flags override");
    app.add_option("--out", opt.out_path, "Output file (default: stdout)");
    app.add_flag("--gnuplot", opt.gnuplot,
                 "Also write a <out>.gp plotting script referencing the CSV");
    app.add_option("--seed", opt.seed, "Master seed");
    app.add_option("--trials", opt.trials, "Trials per sweep point");
    app.add_option("--threads", opt.threads, "Worker threads (0 = auto)");
    app.add_option("--variant", opt.variant, "Preferred-power fit: r44|r45|both");
    app.add_option("--termination", opt.termination,
                   "Run termination: strict|continue");
    app.add_option("--receivers", opt.receivers, "Receiver count");
    app.add_option("--power", opt.power, "Transmitting power, W");
    app.add_option("--hours", opt.hours, "Pre-set charging time, h");
    app.add_option("--slot-seconds", opt.slot_seconds, "Charging time slot, s");
    app.add_option("--initial-soc", opt.initial_soc,
                   "Comma list of initial SOC fractions (default: uniform random)");
    app.add_option("--forced-status", opt.forced_status,
                   "Pin discharge status: none|standby|video|social|game|music");
    app.add_option("--eta-el", opt.eta_el, "Electro-optical efficiency");
    app.add_option("--eta-lt", opt.eta_lt, "Beam transmission efficiency");
    app.add_option("--eta-le", opt.eta_le, "Photoelectric efficiency");
    app.add_option("--delivery-efficiency", opt.delivery_efficiency,
                   "Battery watts per allocated transmit watt "
                   "(default: eta_lt * eta_le)");
    app.add_flag("--no-partial-rotation", opt.no_partial_rotation,
                 "Keep a partially served receiver at the queue head");
    app.add_option("--checkpoints", opt.checkpoints, "Checkpoint hours, comma list");
    app.add_option("--receiver-counts", opt.receiver_counts,
                   "Sweep axis: receiver counts, comma list");
    app.add_option("--powers", opt.powers,
                   "Sweep axis: transmitting powers (W), comma list");
    app.add_option("--tc-hours", opt.profile.tc_hours, "Trickle stage length, h");
    app.add_option("--cc-hours", opt.profile.cc_hours, "Constant-current stage, h");
    app.add_option("--cv-hours", opt.profile.cv_hours, "Constant-voltage stage, h");
    app.add_option("--profile-step", opt.profile.sample_step_hours,
                   "Profile sample step, h");
    app.add_option("--trickle-current", opt.profile.trickle_current,
                   "Trickle current, A");
    app.add_option("--initial-voltage", opt.profile.initial_voltage,
                   "Voltage at the start of charge, V");
    app.add_option("--termination-current", opt.profile.termination_current,
                   "Charge termination current, A");

    auto* simulate = app.add_subcommand("simulate", "One run, per-slot trace CSV");
    auto* sweep = app.add_subcommand("sweep", "Trial-averaged parameter sweep");
    sweep->add_option("--kind", opt.kind, "time|power")->required();
    auto* validate = app.add_subcommand("validate-fit",
                                        "Score fits against the synthesized profile");
    auto* profile = app.add_subcommand("profile", "Emit the CC-CV profile CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfigError;
    }

    try {
        apply_config_file(app, opt);
        if (simulate->parsed()) return run_simulate(opt);
        if (sweep->parsed()) return run_sweep(opt);
        if (validate->parsed()) return run_validate(opt);
        if (profile->parsed()) return run_profile(opt);
        throw rbc::ConfigError("no subcommand selected");
    } catch (const rbc::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}
