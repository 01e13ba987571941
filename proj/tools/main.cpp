// arclen: arclength respacing of polygonal curves from the command line.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input or flags.

#include <CLI11.hpp>

#include <arclen/arclen.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad())
        throw IoError("cannot read " + path);
    return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path + " for writing");
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out)
        throw IoError("cannot write " + path);
}

arclen::PolygonalCurve load_curve(const std::string& path) {
    return arclen::read_csv(read_file(path));
}

struct RespaceArgs {
    std::string input, output;
    std::size_t iterations = 1;
    double delta = 0.0;
    bool has_delta = false;
};

void cmd_respace(const RespaceArgs& args) {
    arclen::PolygonalCurve curve = load_curve(args.input);
    std::printf("length before: %s\n", arclen::format_coord(arclen::length(curve)).c_str());
    if (args.has_delta) {
        curve = arclen::respace_with_spacing(curve, args.delta);
    } else {
        for (std::size_t i = 0; i < args.iterations; ++i)
            curve = arclen::respace(curve);
    }
    std::printf("length after: %s\n", arclen::format_coord(arclen::length(curve)).c_str());
    write_file(args.output, arclen::write_csv(curve));
}

struct IterateArgs {
    std::string input, output, trace;
    arclen::IterationConfig cfg;
};

void cmd_iterate(const IterateArgs& args) {
    const arclen::PolygonalCurve curve = load_curve(args.input);
    const arclen::IterationResult result = arclen::iterate(curve, args.cfg);
    std::printf("stop reason: %s\n", arclen::to_string(result.trace.stop_reason));
    std::printf("iterations: %zu\n", result.trace.iterations());
    if (result.trace.stop_reason == arclen::StopReason::MaxIters)
        std::fprintf(stderr, "warning: stopped after %zu iterations without converging\n",
                     args.cfg.max_iters);
    write_file(args.output, arclen::write_csv(result.curve));
    if (!args.trace.empty())
        write_file(args.trace, arclen::write_trace_csv(result.trace));
}

struct StatsArgs {
    std::string input, csv;
    std::size_t iterations = 15;
    bool all = false;
};

void cmd_stats(const StatsArgs& args) {
    const arclen::PolygonalCurve curve = load_curve(args.input);
    arclen::IterationConfig cfg;
    cfg.max_iters = std::max<std::size_t>(args.iterations, 1);
    cfg.tol_displacement = 0.0; // run the full schedule even past convergence
    const arclen::IterationTrace trace = arclen::iterate(curve, cfg).trace;
    const auto& records = trace.records;
    const std::size_t last = records.back().n;

    std::vector<std::size_t> rows;
    if (args.all) {
        for (std::size_t n = 0; n <= args.iterations; ++n)
            rows.push_back(n);
    } else {
        for (std::size_t n : {0, 1, 2, 3, 5, 10, 15})
            if (n <= args.iterations)
                rows.push_back(n);
    }

    std::printf("%4s %12s %12s %12s %12s\n", "n", "sigma", "ratio", "max", "min");
    for (std::size_t n : rows) {
        // past convergence the curve stops changing; reuse the last record
        const std::size_t i = std::min(n, last);
        const arclen::SpacingStats& st = records[i].stats;
        char ratio[32] = "-";
        if (i > 0 && records[i - 1].stats.sigma > 0.0)
            std::snprintf(ratio, sizeof ratio, "%.6f", st.sigma / records[i - 1].stats.sigma);
        std::printf("%4zu %12.6f %12s %12.6f %12.6f\n", n, st.sigma, ratio, st.max, st.min);
    }
    if (!args.csv.empty())
        write_file(args.csv, arclen::write_trace_csv(trace));
}

struct GenerateArgs {
    std::string output;
    arclen::GeneratorSpec spec;
};

void cmd_generate(const GenerateArgs& args) {
    const arclen::PolygonalCurve curve = arclen::generate(args.spec);
    std::printf("points: %zu\n", curve.vertex_count());
    std::printf("length: %s\n", arclen::format_coord(arclen::length(curve)).c_str());
    write_file(args.output, arclen::write_csv(curve));
}

struct RenderArgs {
    std::vector<std::string> inputs;
    std::string output;
    std::vector<std::string> strokes;
    double stroke_width = 0.0;
    double vertex_radius = 0.0;
    std::vector<std::size_t> project;
};

void cmd_render(const RenderArgs& args) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    std::vector<std::pair<arclen::PolygonalCurve, arclen::SvgStyle>> curves;
    for (std::size_t i = 0; i < args.inputs.size(); ++i) {
        arclen::SvgStyle style;
        style.stroke = i < args.strokes.size() ? args.strokes[i]
                                               : kPalette[i % std::size(kPalette)];
        style.stroke_width = args.stroke_width;
        style.vertex_radius = args.vertex_radius;
        curves.emplace_back(load_curve(args.inputs[i]), std::move(style));
    }
    arclen::SvgOptions opts;
    if (!args.project.empty())
        opts.projection = {args.project[0], args.project[1]};
    write_file(args.output, arclen::render_svg(curves, opts));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"arclength respacing of polygonal curves"};
    app.require_subcommand(1);

    RespaceArgs respace_args;
    CLI::App* respace = app.add_subcommand("respace", "respace a curve once or n times");
    respace->add_option("input", respace_args.input, "curve CSV to read")->required();
    respace->add_option("output", respace_args.output, "curve CSV to write")->required();
    CLI::Option* iters_opt =
        respace->add_option("--iterations", respace_args.iterations, "respacings to apply")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    respace
        ->add_option("--delta", respace_args.delta,
                     "vertex spacing; output has floor(L/delta)+1 vertices")
        ->check(CLI::PositiveNumber)
        ->excludes(iters_opt);

    IterateArgs iterate_args;
    CLI::App* iterate = app.add_subcommand("iterate", "respace until convergence");
    iterate->add_option("input", iterate_args.input, "curve CSV to read")->required();
    iterate->add_option("output", iterate_args.output, "converged curve CSV")->required();
    iterate->add_option("--trace", iterate_args.trace, "write per-iteration stats CSV here");
    iterate->add_option("--max-iters", iterate_args.cfg.max_iters, "iteration budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    iterate
        ->add_option("--tol-displacement", iterate_args.cfg.tol_displacement,
                     "stop when no vertex moves farther than this")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    iterate
        ->add_option("--tol-sigma", iterate_args.cfg.tol_sigma,
                     "stop when spacing sigma drops below this (0 disables)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "spacing statistics per iteration");
    stats->add_option("input", stats_args.input, "curve CSV to read")->required();
    stats->add_option("--iterations", stats_args.iterations, "iterations to run")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    stats->add_flag("--all", stats_args.all, "print every iteration, not the sparse schedule");
    stats->add_option("--csv", stats_args.csv, "also write the full trace CSV here");

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand("generate", "write a synthetic test curve");
    static const std::map<std::string, arclen::CurveKind> kKinds{
        {"random-walk", arclen::CurveKind::RandomWalk},
        {"regular-polygon", arclen::CurveKind::RegularPolygon},
        {"isosceles", arclen::CurveKind::IsoscelesTriangle},
        {"parallelogram", arclen::CurveKind::Parallelogram},
        {"collinear", arclen::CurveKind::Collinear},
        {"noisy-closed-blob", arclen::CurveKind::NoisyClosedBlob},
    };
    generate->add_option("output", generate_args.output, "curve CSV to write")->required();
    generate->add_option("--kind", generate_args.spec.kind, "curve family")
        ->required()
        ->transform(CLI::CheckedTransformer(kKinds, CLI::ignore_case));
    generate->add_option("--seed", generate_args.spec.seed, "random seed")
        ->capture_default_str();
    generate->add_option("--dim", generate_args.spec.dim, "dimension (random-walk)")
        ->check(CLI::PositiveNumber);
    generate
        ->add_option("--points", generate_args.spec.points,
                     "vertex count (random-walk, noisy-closed-blob)")
        ->check(CLI::PositiveNumber);
    generate
        ->add_option("--scale", generate_args.spec.scale,
                     "step size or base radius (random-walk, noisy-closed-blob)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--sides,-k", generate_args.spec.sides, "side count (regular-polygon)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--side", generate_args.spec.side, "side length (regular-polygon)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--apex", generate_args.spec.apex_angle,
                         "apex angle in radians (isosceles)");
    generate->add_option("--side-a", generate_args.spec.side_a, "first side (parallelogram)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--side-b", generate_args.spec.side_b, "second side (parallelogram)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--angle", generate_args.spec.angle,
                         "corner angle in radians (parallelogram)");
    generate->add_option("--steps,-n", generate_args.spec.steps,
                         "respacings until equilateral (collinear)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--noise", generate_args.spec.noise,
                         "radial noise amplitude (noisy-closed-blob)")
        ->check(CLI::NonNegativeNumber);

    RenderArgs render_args;
    CLI::App* render = app.add_subcommand("render", "draw curves into an SVG");
    render->add_option("inputs", render_args.inputs, "curve CSVs to overlay")->required();
    render->add_option("--out,-o", render_args.output, "SVG file to write")->required();
    render->add_option("--stroke", render_args.strokes, "stroke color per curve, in order");
    render->add_option("--stroke-width", render_args.stroke_width, "0 picks one automatically")
        ->check(CLI::NonNegativeNumber);
    render->add_option("--vertex-radius", render_args.vertex_radius, "0 picks one automatically")
        ->check(CLI::NonNegativeNumber);
    render
        ->add_option("--project", render_args.project,
                     "two zero-based axes to project onto (for dim != 2)")
        ->expected(2);

    try {
        app.parse(argc, argv);
        if (respace->parsed()) {
            respace_args.has_delta = respace->count("--delta") > 0;
            cmd_respace(respace_args);
        } else if (iterate->parsed()) {
            cmd_iterate(iterate_args);
        } else if (stats->parsed()) {
            cmd_stats(stats_args);
        } else if (generate->parsed()) {
            cmd_generate(generate_args);
        } else if (render->parsed()) {
            cmd_render(render_args);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const IoError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const arclen::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
