#include "bda/cli.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "bda/io.hpp"
#include "bda/metrics.hpp"
#include "bda/raster.hpp"
#include "bda/synth.hpp"
#include "bda/truth.hpp"
#include "bda/zonal.hpp"

namespace bda::cli {

namespace {

struct Options {
    std::string footprints;
    std::string raster;
    std::string points;
    std::string assessed;
    std::string matched;
    std::string curve;
    std::string config;
    std::string out;
    std::string scheme = "major_plus";
    double radius_m = truth::kDefaultRadiusM;
    std::optional<std::uint64_t> seed;
    std::optional<int> grid_cols;
    std::optional<int> grid_rows;
    std::optional<double> pixel_noise_rate;
    std::optional<double> point_jitter_sigma_m;
    std::optional<double> point_drop_rate;
};

// Reads a file and tags any parse failure with its path.
template <typename Fn>
auto load(const std::string& path, Fn&& parse) {
    const std::string text = io::read_file(path);
    return parse(text, path);
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
    if (path.empty()) {
        out << contents;
    } else {
        io::write_file(path, contents);
    }
}

int cmd_assess(const Options& o, std::ostream& out, std::ostream& err) {
    const auto records = load(o.footprints, io::parse_footprints);
    const auto grid = load(o.raster, [](const std::string& text, const std::string& path) {
        try {
            return raster::parse_ascii_grid(text);
        } catch (const Error& e) {
            throw Error(e.code(), path + ": " + e.what());
        }
    });
    const auto fps = io::footprints_of(records);
    const auto estimates = zonal::assess_all(grid, fps);
    emit(o.out, io::write_assessed(records, estimates), out);
    std::size_t supersampled = 0;
    std::size_t uncovered = 0;
    for (const auto& e : estimates) {
        supersampled += e.supersampled && !e.no_coverage;
        uncovered += e.no_coverage;
    }
    err << "assessed " << estimates.size() << " footprints (" << supersampled << " supersampled, " << uncovered
        << " without coverage)\n";
    return kOk;
}

int cmd_match(const Options& o, std::ostream& out, std::ostream& err) {
    const auto points = load(o.points, io::parse_points);
    const auto fps = io::footprints_of(load(o.footprints, io::parse_footprints));
    const auto result = truth::match_points(points, fps, o.radius_m);
    emit(o.out, io::write_matches(points, result), out);
    err << "matched " << result.matched.size() << ", unmatched " << result.unmatched.size() << "\n";
    return kOk;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    const auto scheme = truth::BinaryScheme::parse(o.scheme);
    const auto estimates = load(o.assessed, io::parse_assessed);
    const auto matches = load(o.matched, io::parse_matches);
    const auto points = load(o.points, io::parse_points);
    const auto samples = truth::join_samples(matches, estimates, points, scheme);
    const auto report = metrics::validate(samples, scheme.name());
    emit(o.out, io::write_report(report), out);
    if (!o.curve.empty()) io::write_file(o.curve, io::write_curve(report.curve));
    err << "samples " << report.n_samples << ", positive " << report.n_positive << ", precision0 "
        << report.precision0 << ", recall0 " << report.recall0 << ", AP " << report.ap << "\n";
    return kOk;
}

int cmd_pr_plot(const Options& o, std::ostream& out, std::ostream&) {
    const auto curve = load(o.curve, io::parse_curve);
    emit(o.out, io::render_pr_svg(curve), out);
    return kOk;
}

int cmd_synth(const Options& o, std::ostream&, std::ostream& err) {
    synth::SceneSpec spec;
    if (!o.config.empty()) spec = load(o.config, io::parse_scene_spec);
    if (o.seed) spec.seed = *o.seed;
    if (o.grid_cols) spec.grid_cols = *o.grid_cols;
    if (o.grid_rows) spec.grid_rows = *o.grid_rows;
    if (o.pixel_noise_rate) spec.pixel_noise_rate = *o.pixel_noise_rate;
    if (o.point_jitter_sigma_m) spec.point_jitter_sigma_m = *o.point_jitter_sigma_m;
    if (o.point_drop_rate) spec.point_drop_rate = *o.point_drop_rate;
    const auto scene = synth::generate(spec);
    io::write_scene(scene, o.out);
    err << "wrote " << scene.footprints.size() << " footprints, " << scene.truth.size() << " points, "
        << scene.raster.ncols() << "x" << scene.raster.nrows() << " raster to " << o.out << "\n";
    return kOk;
}

}  // namespace

int exit_code_for(Errc code) noexcept {
    switch (code) {
        case Errc::DuplicateFootprintId:
        case Errc::DuplicatePointId: return kDuplicateId;
        case Errc::UnknownCategory: return kUnknownCategory;
        case Errc::MissingEstimate: return kMissingEstimate;
        case Errc::EmptySampleSet:
        case Errc::NoPositiveSamples: return kNoPositives;
        case Errc::SwathOutsideScene: return kSwathOutside;
        default: return kParse;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Building damage assessment: zonal damage estimates, ground-truth matching and validation", "bda"};
    app.require_subcommand(1);
    Options o;

    auto* assess = app.add_subcommand("assess", "Per-footprint percent damage from a classification raster");
    assess->add_option("--footprints", o.footprints, "Footprint GeoJSON")->required();
    assess->add_option("--raster", o.raster, "Classification raster (.asc)")->required();
    assess->add_option("--out", o.out, "Output GeoJSON (default: stdout)");

    auto* match = app.add_subcommand("match", "Associate ground-truth points with the nearest footprint");
    match->add_option("--points", o.points, "Ground-truth CSV")->required();
    match->add_option("--footprints", o.footprints, "Footprint GeoJSON")->required();
    match->add_option("--radius-m", o.radius_m, "Match radius in meters")->default_val(truth::kDefaultRadiusM);
    match->add_option("--out", o.out, "Output CSV (default: stdout)");

    auto* validate = app.add_subcommand("validate", "Precision/recall at any damage, PR curve and AP");
    validate->add_option("--assessed", o.assessed, "Output of `assess`")->required();
    validate->add_option("--matched", o.matched, "Output of `match`")->required();
    validate->add_option("--points", o.points, "Ground-truth CSV")->required();
    validate->add_option("--scheme", o.scheme, "major_plus | destroyed_only | comma-separated categories")
        ->default_val("major_plus");
    validate->add_option("--out", o.out, "Report JSON (default: stdout)");
    validate->add_option("--curve", o.curve, "PR curve CSV");

    auto* plot = app.add_subcommand("pr-plot", "Render a PR curve CSV as SVG");
    plot->add_option("--curve", o.curve, "PR curve CSV")->required();
    plot->add_option("--out", o.out, "Output SVG (default: stdout)");

    auto* synth = app.add_subcommand("synth", "Generate a deterministic synthetic tornado scene");
    synth->add_option("--config", o.config, "Scene spec JSON");
    synth->add_option("--out", o.out, "Output directory")->required();
    synth->add_option("--seed", o.seed, "Override the spec seed");
    synth->add_option("--grid-cols", o.grid_cols, "Override grid_cols");
    synth->add_option("--grid-rows", o.grid_rows, "Override grid_rows");
    synth->add_option("--pixel-noise-rate", o.pixel_noise_rate, "Override pixel_noise_rate");
    synth->add_option("--point-jitter-sigma-m", o.point_jitter_sigma_m, "Override point_jitter_sigma_m");
    synth->add_option("--point-drop-rate", o.point_drop_rate, "Override point_drop_rate");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "assess") return cmd_assess(o, out, err);
        if (name == "match") return cmd_match(o, out, err);
        if (name == "validate") return cmd_validate(o, out, err);
        if (name == "pr-plot") return cmd_pr_plot(o, out, err);
        return cmd_synth(o, out, err);
    } catch (const Error& e) {
        err << "bda " << name << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

}  // namespace bda::cli
