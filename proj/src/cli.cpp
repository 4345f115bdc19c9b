// SPDX-License-Identifier: Apache-2.0
//
// indoorpl: indoor path loss modelling and calibration for the 2.4 GHz ISM band
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "indoorpl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "indoorpl/calibrate.hpp"
#include "indoorpl/coverage.hpp"
#include "indoorpl/error.hpp"
#include "indoorpl/ingest.hpp"
#include "indoorpl/params_io.hpp"
#include "indoorpl/plan_io.hpp"
#include "indoorpl/report.hpp"
#include "indoorpl/synth.hpp"

namespace indoorpl::cli
{

namespace
{

constexpr const char *floor_penetration_note =
    "ITU-R floor penetration P_f(n) defaults to 15 + 4(n-1) dB for n >= 1 (ITU-R office rule, "
    "not a measured value); override it with --params.";

// Raw flag values, shared by all subcommands.
struct Options
{
    int channel = 1;
    double frequency_mhz = 0.0;
    std::string scenario = "busy";
    std::string plan;
    std::string data;
    std::string budget = "15,0,0";
    std::string params;
    std::string out;
    std::uint64_t seed = 1;
    double resolution_m = 0.5;
    double bin_width_m = default_bin_width_m;

    std::string model = "tiplm";
    std::string models = "tiplm,itur,logd";
    std::string environment = "office";
    double gamma = 0.0;
    double d0_m = 0.0;
    double nt = 0.0;

    // predict
    double distance_m = 0.0;
    std::string obstacles;
    int floor_delta = 0;
    std::string tx;
    std::string rx;

    // fit
    bool weighted = false;
    bool per_obstacle = false;
    std::string histogram;
    double histogram_bin_db = default_histogram_bin_db;

    // coverage
    std::string ap = "0,0,0";
    int floor = 0;
    std::string pgm;
    unsigned threads = 0;

    // synth
    std::string config;
    double noise_mean_db = 0.5;
    double noise_std_db = 3.58;
    int locations = 100;
    int samples = 10;
    std::string floors;
    std::string distance_range;
};

std::vector<std::string> split(const std::string &text, char sep)
{
    std::vector<std::string> parts;
    std::string part;
    std::istringstream ss(text);
    while (std::getline(ss, part, sep))
        parts.push_back(part);
    if (!text.empty() && text.back() == sep)
        parts.emplace_back();
    return parts;
}

double to_double(const std::string &s, const std::string &what)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw InvalidArgument(what + ": '" + s + "' is not a number");
    return v;
}

int to_int(const std::string &s, const std::string &what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidArgument(what + ": '" + s + "' is not an integer");
    return v;
}

LinkBudget parse_budget(const std::string &text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw InvalidArgument("--budget expects txdbm,txgain,rxgain, got '" + text + "'");
    LinkBudget b{to_double(parts[0], "--budget"), to_double(parts[1], "--budget"), to_double(parts[2], "--budget")};
    validate(b);
    return b;
}

Point3 parse_point(const std::string &text, const std::string &flag)
{
    const auto parts = split(text, ',');
    if (parts.size() != 3)
        throw InvalidArgument(flag + " expects x,y,floor, got '" + text + "'");
    return {to_double(parts[0], flag), to_double(parts[1], flag), to_int(parts[2], flag)};
}

ObstructionSummary parse_obstacles(const std::string &text)
{
    ObstructionSummary s;
    if (text.empty() || text == "none")
        return s;
    for (const auto &item : split(text, ','))
    {
        const auto kv = split(item, ':');
        if (kv.size() != 2)
            throw InvalidArgument("--obstacles expects material:count pairs, got '" + item + "'");
        const int n = to_int(kv[1], "--obstacles");
        if (n < 0)
            throw InvalidArgument("--obstacles counts cannot be negative");
        s.add(builtin_material(kv[0]), n);
    }
    return s;
}

struct Resolved
{
    double frequency_mhz;
    std::optional<Channel> channel;
};

Resolved resolve_frequency(const Options &o, const CLI::App &sub)
{
    if (sub.count("--frequency-mhz") > 0)
    {
        if (!std::isfinite(o.frequency_mhz) || o.frequency_mhz <= 0.0)
            throw DomainError("--frequency-mhz must be positive");
        return {o.frequency_mhz, channel_for_frequency(o.frequency_mhz)};
    }
    const Channel c(o.channel);
    return {channel_to_frequency(c), c};
}

ModelParams load_params(const Options &o, const CLI::App &sub)
{
    ModelParams p;
    if (!o.params.empty())
        p = load_param_overrides(o.params, p);
    if (sub.get_option_no_throw("--environment") && sub.count("--environment") > 0)
        p.itu_r.n_coeff = itu_distance_coefficient(parse_itu_environment(o.environment));
    if (sub.get_option_no_throw("--gamma") && sub.count("--gamma") > 0)
        p.log_distance.gamma = o.gamma;
    if (sub.get_option_no_throw("--d0") && sub.count("--d0") > 0)
        p.log_distance.d0_m = o.d0_m;
    if (sub.get_option_no_throw("--scenario") && sub.count("--scenario") > 0)
        p.tiplm.scenario = parse_scenario(o.scenario);
    else if (o.params.empty())
        p.tiplm.scenario = parse_scenario(o.scenario);
    validate(p.itu_r);
    validate(p.log_distance);
    validate(p.tiplm);
    return p;
}

PathLossModel build_model(ModelKind kind, const ModelParams &p, std::optional<Channel> channel,
                          std::optional<double> nt_override)
{
    switch (kind)
    {
    case ModelKind::TIplm: return PathLossModel(TIplmModel{p.tiplm, channel, nt_override});
    case ModelKind::ItuR: return PathLossModel(p.itu_r);
    case ModelKind::LogDistance: break;
    }
    return PathLossModel(p.log_distance);
}

std::optional<double> nt_flag(const Options &o, const CLI::App &sub)
{
    if (sub.get_option_no_throw("--nt") && sub.count("--nt") > 0)
        return o.nt;
    return std::nullopt;
}

std::string fixed(double v, int precision = 4)
{
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(precision) << v;
    return ss.str();
}

std::ofstream open_output(const std::string &path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot write '" + path + "'");
    return f;
}

Channel require_channel(const Resolved &r)
{
    if (!r.channel)
        throw InvalidArgument(fixed(r.frequency_mhz, 1) +
                              " MHz is not a channel center; drive-test records are selected by channel");
    return *r.channel;
}

// ---------------------------------------------------------------------------------------------

void cmd_predict(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const ModelParams params = load_params(o, sub);
    const Resolved freq = resolve_frequency(o, sub);
    const PathLossModel model = build_model(parse_model_kind(o.model), params, freq.channel, nt_flag(o, sub));
    const LinkBudget budget = parse_budget(o.budget);

    LinkContext ctx;
    ctx.frequency_mhz = freq.frequency_mhz;
    ctx.channel = freq.channel;
    if (!o.plan.empty())
    {
        if (o.tx.empty() || o.rx.empty())
            throw InvalidArgument("--plan needs both --tx and --rx");
        const FloorPlan plan = load_floor_plan(o.plan);
        const Point3 tx = parse_point(o.tx, "--tx");
        const Point3 rx = parse_point(o.rx, "--rx");
        validate_point(plan, tx);
        validate_point(plan, rx);
        ctx.distance_m = distance(tx, rx, plan);
        ctx.floor_delta = floor_delta(tx, rx);
        if (tx.floor == rx.floor)
            ctx.obstructions = count_obstructions(plan, tx, rx);
    }
    else
    {
        if (sub.count("--distance") == 0)
            throw InvalidArgument("predict needs --distance (or --plan with --tx and --rx)");
        ctx.distance_m = o.distance_m;
        ctx.obstructions = parse_obstacles(o.obstacles);
        ctx.floor_delta = o.floor_delta;
    }

    const double pl = model.path_loss(ctx);
    out << "model: " << model.name() << '\n';
    if (model.kind() == ModelKind::TIplm)
        out << "scenario: " << to_string(params.tiplm.scenario) << '\n';
    out << "frequency: " << fixed(ctx.frequency_mhz, 1) << " MHz\n";
    out << "distance: " << fixed(ctx.distance_m) << " m\n";
    out << "obstructions: " << to_string(ctx.obstructions) << '\n';
    out << "floor delta: " << ctx.floor_delta << '\n';
    out << "path loss: " << fixed(pl) << " dB\n";
    out << "predicted rssi: " << fixed(predicted_rssi(pl, budget)) << " dBm\n";
}

struct Dataset
{
    FloorPlan plan;
    MeasurementSet set;
    std::vector<AggregatedPoint> points;
    Resolved freq;
};

Dataset load_dataset(const Options &o, const CLI::App &sub)
{
    Dataset ds{load_floor_plan(o.plan), {}, {}, resolve_frequency(o, sub)};
    const Channel channel = require_channel(ds.freq);
    const MeasurementSet all = load_measurements(o.data, parse_budget(o.budget));
    ds.set = filter_channel(all, channel);
    if (ds.set.records.empty())
        throw EmptyInput(o.data + ": no records on channel " + std::to_string(channel.index()));
    ds.points = aggregate(ds.set, ds.plan, o.bin_width_m);
    return ds;
}

AnalysisReport base_report(const Dataset &ds, const ModelParams &p)
{
    AnalysisReport r;
    r.plan_name = ds.plan.name();
    if (ds.freq.channel)
        r.channel = ds.freq.channel->index();
    r.frequency_mhz = ds.freq.frequency_mhz;
    r.scenario = std::string(to_string(p.tiplm.scenario));
    r.record_count = ds.set.records.size();
    r.point_count = ds.points.size();
    return r;
}

void cmd_fit(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const ModelParams params = load_params(o, sub);
    const Dataset ds = load_dataset(o, sub);
    const ModelKind kind = parse_model_kind(o.model);
    const FitOptions fit_options{o.weighted};

    AnalysisReport report = base_report(ds, params);
    std::vector<double> res;
    if (kind == ModelKind::TIplm)
    {
        const FitResult fit = fit_nt(ds.points, ds.freq.frequency_mhz, params.tiplm, fit_options);
        report.fits.push_back(fit);
        if (o.per_obstacle)
            report.obstacle_fits = fit_nt_by_obstacle_count(ds.points, ds.freq.frequency_mhz, params.tiplm, fit_options);
        res = residuals(ds.points, ds.freq.frequency_mhz, build_model(kind, params, ds.freq.channel, fit.estimate));
    }
    else if (kind == ModelKind::LogDistance)
    {
        const FitResult fit = fit_gamma(ds.points, ds.freq.frequency_mhz, params.log_distance.d0_m, fit_options);
        report.fits.push_back(fit);
        ModelParams fitted = params;
        fitted.log_distance.gamma = fit.estimate;
        res = residuals(ds.points, ds.freq.frequency_mhz, build_model(kind, fitted, ds.freq.channel, std::nullopt));
    }
    else
        throw InvalidArgument("fit supports --model tiplm (N_T) or logd (gamma)");

    report.errors = error_stats(res, o.histogram_bin_db);
    write_report_text(out, report);
    if (!o.out.empty())
        open_output(o.out) << report_to_json(report);
    if (!o.histogram.empty())
    {
        auto f = open_output(o.histogram);
        write_histogram_csv(f, *report.errors);
    }
}

void cmd_compare(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const ModelParams params = load_params(o, sub);
    const Dataset ds = load_dataset(o, sub);

    std::vector<PathLossModel> models;
    for (const auto &name : split(o.models, ','))
        models.push_back(build_model(parse_model_kind(name), params, ds.freq.channel, nt_flag(o, sub)));
    if (models.empty())
        throw InvalidArgument("--models lists no models");

    AnalysisReport report = base_report(ds, params);
    report.comparison = compare_models(ds.points, ds.freq.frequency_mhz, models);
    write_report_text(out, report);
    if (!o.out.empty())
        open_output(o.out) << report_to_json(report);
}

void cmd_coverage(const Options &o, const CLI::App &sub, std::ostream &out)
{
    const ModelParams params = load_params(o, sub);
    const Resolved freq = resolve_frequency(o, sub);
    const FloorPlan plan = load_floor_plan(o.plan);
    const Point3 ap = parse_point(o.ap, "--ap");
    const PathLossModel model = build_model(parse_model_kind(o.model), params, freq.channel, nt_flag(o, sub));
    const int floor = sub.count("--floor") > 0 ? o.floor : ap.floor;

    CoverageOptions options;
    options.threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
    const CoverageGrid grid =
        coverage_grid(plan, ap, model, parse_budget(o.budget), freq.frequency_mhz, floor, o.resolution_m, options);

    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : grid.rssi_dbm)
        if (!std::isnan(v))
        {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    out << "model: " << model.name() << '\n';
    out << "grid: " << grid.width << " x " << grid.height << " cells at " << fixed(grid.resolution_m, 3)
        << " m, origin (" << fixed(grid.origin.x, 3) << ", " << fixed(grid.origin.y, 3) << "), floor " << grid.floor
        << '\n';
    if (std::isfinite(lo))
        out << "rssi range: " << fixed(lo) << " .. " << fixed(hi) << " dBm\n";
    out << "invalid cells: " << grid.invalid_cells << '\n';

    if (!o.out.empty())
    {
        auto f = open_output(o.out);
        write_coverage_csv(f, grid);
    }
    if (!o.pgm.empty())
    {
        auto f = open_output(o.pgm);
        write_coverage_pgm(f, grid);
    }
}

void cmd_synth(const Options &o, const CLI::App &sub, std::ostream &out)
{
    SynthConfig cfg;
    if (!o.config.empty())
        cfg = load_synth_config(o.config);
    auto given = [&sub](const char *flag) { return sub.count(flag) > 0; };

    if (given("--plan"))
        cfg.plan = load_floor_plan(o.plan);
    if (given("--ap"))
        cfg.ap = parse_point(o.ap, "--ap");
    if (given("--channel") || given("--frequency-mhz") || o.config.empty())
        cfg.channel = require_channel(resolve_frequency(o, sub));
    if (!o.params.empty() || given("--scenario"))
    {
        ModelParams p;
        p.tiplm = cfg.params;
        if (!o.params.empty())
            p = load_param_overrides(o.params, p);
        cfg.params = p.tiplm;
    }
    if (given("--scenario") || o.config.empty())
        cfg.scenario = parse_scenario(o.scenario);
    if (given("--budget") || o.config.empty())
        cfg.budget = parse_budget(o.budget);
    if (given("--noise-mean") || o.config.empty())
        cfg.noise_mean_db = o.noise_mean_db;
    if (given("--noise-std") || o.config.empty())
        cfg.noise_std_db = o.noise_std_db;
    if (given("--locations") || o.config.empty())
        cfg.n_locations = o.locations;
    if (given("--samples") || o.config.empty())
        cfg.samples_per_location = o.samples;
    if (given("--seed") || o.config.empty())
        cfg.seed = o.seed;
    if (given("--nt"))
        cfg.nt_override = o.nt;
    if (given("--floors"))
    {
        cfg.floors.clear();
        for (const auto &f : split(o.floors, ','))
            cfg.floors.push_back(to_int(f, "--floors"));
    }
    if (given("--distance-range"))
    {
        const auto r = split(o.distance_range, ',');
        if (r.size() != 2)
            throw InvalidArgument("--distance-range expects min,max");
        cfg.distance_range = std::pair{to_double(r[0], "--distance-range"), to_double(r[1], "--distance-range")};
    }
    cfg.params.scenario = cfg.scenario;

    const MeasurementSet set = generate(cfg);
    if (o.out.empty())
        write_measurements(out, set);
    else
    {
        auto f = open_output(o.out);
        write_measurements(f, set);
        out << "wrote " << set.records.size() << " records (" << cfg.n_locations << " locations x "
            << cfg.samples_per_location << " samples) to " << o.out << '\n';
    }
}

// ---------------------------------------------------------------------------------------------

void add_frequency(CLI::App *sub, Options &o)
{
    auto *ch = sub->add_option("--channel", o.channel, "WiFi channel (1-14)")->check(CLI::Range(1, 14))->capture_default_str();
    auto *f = sub->add_option("--frequency-mhz", o.frequency_mhz, "Carrier frequency in MHz instead of a channel");
    ch->excludes(f);
    f->excludes(ch);
}

void add_model_params(CLI::App *sub, Options &o)
{
    sub->add_option("--scenario", o.scenario, "T-IPLM scenario: busy, open or corridor")->capture_default_str();
    sub->add_option("--params", o.params, "JSON file overriding model parameter tables");
    sub->add_option("--environment", o.environment, "ITU-R environment: office (N=30), residential (28), commercial (22)")
        ->capture_default_str();
    sub->add_option("--gamma", o.gamma, "Log-distance path loss exponent (default 3)");
    sub->add_option("--d0", o.d0_m, "Log-distance reference distance in m (default 1)");
    sub->add_option("--budget", o.budget, "Link budget txdbm,txgain,rxgain")->capture_default_str();
    sub->footer(floor_penetration_note);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Indoor path loss prediction, calibration and comparison for the 2.4 GHz ISM band"};
    app.name(args.empty() ? "indoorpl" : std::filesystem::path(args.front()).filename().string());
    app.require_subcommand(1);
    app.footer(floor_penetration_note);
    Options o;

    auto *predict = app.add_subcommand("predict", "Evaluate one path loss model for one link");
    predict->add_option("--model", o.model, "tiplm, itur or logd")->capture_default_str();
    add_frequency(predict, o);
    add_model_params(predict, o);
    predict->add_option("--nt", o.nt, "Use this N_T instead of the tables");
    auto *dist = predict->add_option("--distance", o.distance_m, "Transmitter-receiver distance in m");
    auto *obst = predict->add_option("--obstacles", o.obstacles, "Crossed obstacles, e.g. concrete:2,glass:1");
    auto *fdelta = predict->add_option("--floor-delta", o.floor_delta, "Receiver floor minus transmitter floor")
                       ->capture_default_str();
    auto *plan_opt = predict->add_option("--plan", o.plan, "Floor plan JSON; derive geometry from --tx/--rx");
    auto *tx = predict->add_option("--tx", o.tx, "Transmitter x,y,floor (with --plan)");
    auto *rx = predict->add_option("--rx", o.rx, "Receiver x,y,floor (with --plan)");
    for (auto *manual : {dist, obst, fdelta})
        for (auto *geo : {plan_opt, tx, rx})
            manual->excludes(geo);
    tx->needs(plan_opt);
    rx->needs(plan_opt);

    auto *fit = app.add_subcommand("fit", "Fit N_T (T-IPLM) or gamma (Log-distance) to drive-test data");
    fit->add_option("--model", o.model, "tiplm or logd")->capture_default_str();
    add_frequency(fit, o);
    add_model_params(fit, o);
    fit->add_option("--plan", o.plan, "Floor plan JSON")->required();
    fit->add_option("--data", o.data, "Drive-test CSV")->required();
    fit->add_option("--bin-width", o.bin_width_m, "Distance bin width in m for aggregation")->capture_default_str();
    fit->add_flag("--weighted", o.weighted, "Weight aggregated points by sample count");
    fit->add_flag("--per-obstacle", o.per_obstacle, "Also fit one N_T per obstacle count");
    fit->add_option("--out", o.out, "Write the JSON report here");
    fit->add_option("--histogram", o.histogram, "Write the residual histogram CSV here");
    fit->add_option("--histogram-bin", o.histogram_bin_db, "Residual histogram bin width in dB")->capture_default_str();

    auto *compare = app.add_subcommand("compare", "Rank models by MSE against drive-test data");
    add_frequency(compare, o);
    add_model_params(compare, o);
    compare->add_option("--models", o.models, "Comma-separated models to compare")->capture_default_str();
    compare->add_option("--nt", o.nt, "Use this N_T for T-IPLM instead of the tables");
    compare->add_option("--plan", o.plan, "Floor plan JSON")->required();
    compare->add_option("--data", o.data, "Drive-test CSV")->required();
    compare->add_option("--bin-width", o.bin_width_m, "Distance bin width in m for aggregation")->capture_default_str();
    compare->add_option("--out", o.out, "Write the JSON report here");

    auto *coverage = app.add_subcommand("coverage", "Predicted RSSI heatmap over a floor plan");
    coverage->add_option("--model", o.model, "tiplm, itur or logd")->capture_default_str();
    add_frequency(coverage, o);
    add_model_params(coverage, o);
    coverage->add_option("--nt", o.nt, "Use this N_T instead of the tables");
    coverage->add_option("--plan", o.plan, "Floor plan JSON")->required();
    coverage->add_option("--ap", o.ap, "Access point x,y,floor")->required();
    coverage->add_option("--floor", o.floor, "Floor to map (default: the AP's floor)");
    coverage->add_option("--resolution", o.resolution_m, "Cell size in m")->capture_default_str();
    coverage->add_option("--out", o.out, "Write the RSSI matrix CSV here");
    coverage->add_option("--pgm", o.pgm, "Write a P2 graymap here");
    coverage->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();

    auto *synth = app.add_subcommand("synth", "Generate synthetic drive-test data from T-IPLM plus Gaussian noise");
    synth->add_option("--config", o.config, "JSON synth config; flags override its values");
    add_frequency(synth, o);
    synth->add_option("--scenario", o.scenario, "T-IPLM scenario: busy, open or corridor")->capture_default_str();
    synth->add_option("--params", o.params, "JSON file overriding model parameter tables");
    synth->add_option("--budget", o.budget, "Link budget txdbm,txgain,rxgain")->capture_default_str();
    synth->add_option("--plan", o.plan, "Floor plan JSON");
    synth->add_option("--ap", o.ap, "Access point x,y,floor")->capture_default_str();
    synth->add_option("--noise-mean", o.noise_mean_db, "Noise mean in dB")->capture_default_str();
    synth->add_option("--noise-std", o.noise_std_db, "Noise standard deviation in dB")->capture_default_str();
    synth->add_option("--locations", o.locations, "Receiver locations")->capture_default_str();
    synth->add_option("--samples", o.samples, "Samples per location")->capture_default_str();
    synth->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    synth->add_option("--nt", o.nt, "Ground-truth N_T for every location instead of the tables");
    synth->add_option("--floors", o.floors, "Receiver floors, comma-separated (default: the AP's floor)");
    synth->add_option("--distance-range", o.distance_range, "min,max horizontal distance from the AP in m");
    synth->add_option("--out", o.out, "Write the CSV here instead of standard output");
    synth->footer(floor_penetration_note);

    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e, out, err);
        return exit_usage;
    }

    try
    {
        if (predict->parsed())
            cmd_predict(o, *predict, out);
        else if (fit->parsed())
            cmd_fit(o, *fit, out);
        else if (compare->parsed())
            cmd_compare(o, *compare, out);
        else if (coverage->parsed())
            cmd_coverage(o, *coverage, out);
        else if (synth->parsed())
            cmd_synth(o, *synth, out);
    }
    catch (const Error &e)
    {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_data;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_ok;
}

} // namespace indoorpl::cli
