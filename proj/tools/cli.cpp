#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gaids/error.hpp"
#include "gaids/ga.hpp"
#include "gaids/kdd.hpp"
#include "gaids/model_io.hpp"
#include "gaids/pipeline.hpp"
#include "gaids/report.hpp"
#include "gaids/synth.hpp"

namespace gaids::cli {

namespace {

struct RunConfig {
    std::string train_file;
    std::string test_file;
    std::string model_path;
    std::string replay_file;
    std::string output;
    std::string holdout_output;
    GaParams ga;
    SynthParams synth;
    bool strict = true;
    std::string report = "table";
    std::size_t workers = 1;
};

void require_file(const std::string& path, const char* flag) {
    if (path.empty()) throw Error(ErrorKind::InvalidConfig, std::string(flag) + " is required");
    if (!std::filesystem::is_regular_file(path)) {
        throw Error(ErrorKind::InvalidConfig, std::string(flag) + ": no such file '" + path + "'");
    }
}

LoadOptions load_options(const RunConfig& cfg, LabelPolicy policy) {
    LoadOptions options;
    options.label_policy = policy;
    options.labels.strict = cfg.strict;
    options.skip_malformed = !cfg.strict;
    return options;
}

std::vector<ConnectionRecord> load(const std::string& path, const RunConfig& cfg, LabelPolicy policy,
                                   std::ostream& err) {
    auto result = load_records_file(path, load_options(cfg, policy));
    if (result.skipped_lines > 0) err << path << ": skipped " << result.skipped_lines << " malformed lines\n";
    return std::move(result.records);
}

ReportFormat report_format(const RunConfig& cfg) {
    auto format = parse_report_format(cfg.report);
    if (!format) throw Error(ErrorKind::InvalidConfig, "unknown report format '" + cfg.report + "'");
    return *format;
}

int cmd_train(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_file(cfg.train_file, "--train-file");
    if (cfg.model_path.empty()) throw Error(ErrorKind::InvalidConfig, "--model is required");
    const auto records = load(cfg.train_file, cfg, LabelPolicy::Required, err);
    const ChromosomeModel model = train_model(records, cfg.ga.range);
    save_model(cfg.model_path, model);
    out << format_train_summary(model);
    return kOk;
}

ChromosomeModel model_for(const RunConfig& cfg, std::ostream& err) {
    if (!cfg.model_path.empty()) {
        require_file(cfg.model_path, "--model");
        return load_model(cfg.model_path);
    }
    if (!cfg.train_file.empty()) {
        require_file(cfg.train_file, "--train-file");
        return train_model(load(cfg.train_file, cfg, LabelPolicy::Required, err), cfg.ga.range);
    }
    throw Error(ErrorKind::InvalidConfig, "--model (or --train-file) is required");
}

int cmd_detect(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    require_file(cfg.test_file, "--test-file");
    const ChromosomeModel model = model_for(cfg, err);
    const auto records = load(cfg.test_file, cfg, LabelPolicy::Optional, err);
    const auto predictions = detect_batch(records, model, cfg.ga, cfg.workers);
    for (std::size_t i = 0; i < predictions.size(); ++i) out << format_prediction_row(i, predictions[i]) << '\n';
    return kOk;
}

Category replay_class(std::string_view token, std::size_t line_no) {
    if (auto c = parse_category(token)) return *c;
    if (auto c = category_of(token)) return *c;
    throw Error(ErrorKind::MalformedRecord,
                "replay line " + std::to_string(line_no) + ": unknown class '" + std::string(token) + "'");
}

// Lines of "actual,predicted[,count]" with category or attack names.
ConfusionMatrix replay(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    ConfusionMatrix matrix;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 2 && fields.size() != 3) {
            throw Error(ErrorKind::MalformedRecord, "replay line " + std::to_string(line_no) + ": expected 2 or 3 fields");
        }
        std::int64_t count = 1;
        if (fields.size() == 3) {
            try {
                count = std::stoll(fields[2]);
            } catch (const std::exception&) {
                count = -1;
            }
            if (count < 0) throw Error(ErrorKind::MalformedRecord, "replay line " + std::to_string(line_no) + ": bad count");
        }
        matrix.at(replay_class(fields[0], line_no), replay_class(fields[1], line_no)) += count;
    }
    return matrix;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const ReportFormat format = report_format(cfg);
    ConfusionMatrix matrix;
    if (!cfg.replay_file.empty()) {
        require_file(cfg.replay_file, "--replay");
        matrix = replay(cfg.replay_file);
    } else {
        require_file(cfg.test_file, "--test-file");
        const ChromosomeModel model = model_for(cfg, err);
        const auto records = load(cfg.test_file, cfg, LabelPolicy::Required, err);
        matrix = evaluate_batch(records, model, cfg.ga, cfg.workers);
    }
    out << format_report(matrix, format);
    return kOk;
}

void write_records(const std::string& path, std::span<const RawRecord> records, std::ostream& fallback) {
    if (path.empty() || path == "-") {
        write_kdd(fallback, records);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
    write_kdd(file, records);
}

int cmd_synth(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    const SyntheticData data = generate_synthetic(cfg.synth);
    write_records(cfg.output, data.train, out);
    if (!data.holdout.empty()) {
        if (cfg.holdout_output.empty()) throw Error(ErrorKind::InvalidConfig, "--holdout-output is required");
        write_records(cfg.holdout_output, data.holdout, out);
    }
    return kOk;
}

int exit_code_for(const Error& e) {
    switch (e.family()) {
    case ErrorFamily::Parse: return kParseError;
    case ErrorFamily::Model: return kModelError;
    case ErrorFamily::Config: return kConfigError;
    case ErrorFamily::Runtime: return kRuntimeError;
    }
    return kRuntimeError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Genetic-algorithm intrusion detector for KDD99-format connection records", "gaids"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key=value file; keys match flag names");

    app.add_option("--train-file", cfg.train_file, "labeled KDD99 training records");
    app.add_option("--test-file", cfg.test_file, "records to detect or evaluate");
    app.add_option("--model", cfg.model_path, "model file to write (train) or read");
    app.add_option("--range", cfg.ga.range, "merge radius for precalculation")->capture_default_str();
    app.add_option("--crossover-rate", cfg.ga.crossover_rate)->capture_default_str();
    app.add_option("--mutation-rate", cfg.ga.mutation_rate)->capture_default_str();
    app.add_option("--population-size", cfg.ga.population_size)->capture_default_str();
    app.add_option("--removal-fraction", cfg.ga.removal_fraction)->capture_default_str();
    app.add_option("--max-generations", cfg.ga.max_generations)->capture_default_str();
    app.add_option("--mutation-sigma", cfg.ga.mutation_sigma)->capture_default_str();
    app.add_option("--seed", cfg.ga.seed, "seed for the GA and the synthetic generator")->capture_default_str();
    app.add_option("--workers", cfg.workers, "detection threads")->capture_default_str();
    app.add_flag("--strict,!--lenient", cfg.strict, "abort on malformed lines and unknown labels (default)");
    app.add_option("--report", cfg.report, "report format: table or kv")->capture_default_str();

    app.add_option("--replay", cfg.replay_file, "evaluate: tally 'actual,predicted[,count]' rows instead of running the GA");
    app.add_option("--output", cfg.output, "synth: training output file (default stdout)");
    app.add_option("--holdout-output", cfg.holdout_output, "synth: held-out output file");
    app.add_option("--clusters", cfg.synth.clusters)->capture_default_str();
    app.add_option("--points-per-cluster", cfg.synth.points_per_cluster)->capture_default_str();
    app.add_option("--holdout-per-cluster", cfg.synth.holdout_per_cluster)->capture_default_str();
    app.add_option("--separation", cfg.synth.separation)->capture_default_str();
    app.add_option("--noise-sigma", cfg.synth.noise_sigma)->capture_default_str();

    auto* train = app.add_subcommand("train", "precalculate chromosome groups and write the model");
    auto* detect = app.add_subcommand("detect", "print one prediction row per record");
    auto* evaluate = app.add_subcommand("evaluate", "confusion matrix, detection rate and false positive rate");
    auto* synth = app.add_subcommand("synth", "write a labeled Gaussian-cluster dataset");
    for (auto* sub : {train, detect, evaluate, synth}) sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }

    try {
        cfg.ga.validate();
        cfg.synth.seed = cfg.ga.seed;
        if (cfg.workers < 1) throw Error(ErrorKind::InvalidConfig, "--workers must be at least 1");
        if (*train) return cmd_train(cfg, out, err);
        if (*detect) return cmd_detect(cfg, out, err);
        if (*evaluate) return cmd_evaluate(cfg, out, err);
        return cmd_synth(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kRuntimeError;
    }
}

}  // namespace gaids::cli
