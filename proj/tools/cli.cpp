#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "hazepde/hazepde.hpp"

namespace hazepde::cli {

namespace {

namespace fs = std::filesystem;

struct DehazeArgs {
    std::string input;
    std::string output;
    std::string ablate = "none";
    std::string monotonicity = "as-printed";
    std::string trace_path;
    SolverConfig cfg;
};

struct SynthesizeArgs {
    std::string input;
    std::string output;
    std::optional<double> t;
    std::string t_map;
    std::string airlight;
};

struct EvaluateArgs {
    std::string first;
    std::string second;
};

void write_text_atomically(const fs::path& path, const std::string& text) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
        out << text;
        if (!out) throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ImageIoError(ImageIoErrc::unwritable_path, path.string());
    }
}

std::vector<double> parse_airlight(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw InvalidInput("--airlight: cannot parse '" + item + "'");
        }
        values.push_back(v);
    }
    if (values.size() != 1 && values.size() != 3) {
        throw InvalidInput("--airlight expects R or R,G,B");
    }
    return values;
}

LambdaMonotonicity parse_monotonicity(const std::string& name) {
    if (name == "as-printed") return LambdaMonotonicity::as_printed;
    if (name == "prose") return LambdaMonotonicity::prose;
    throw InvalidInput("--lambda-monotonicity must be as-printed or prose");
}

void add_solver_flags(CLI::App& cmd, SolverConfig& cfg) {
    cmd.add_option("--omega", cfg.omega, "Haze weight in t = 1 - omega*dark")
        ->capture_default_str();
    cmd.add_option("--epsilon", cfg.epsilon, "Diffusion stabilizer")->capture_default_str();
    cmd.add_option("--sigma", cfg.sigma, "Gaussian width in pixels")->capture_default_str();
    cmd.add_option("--kernel-size", cfg.kernel_size, "Odd Gaussian kernel side")
        ->capture_default_str();
    cmd.add_option("--lambda0", cfg.lambda0, "Base regularization weight")
        ->capture_default_str();
    cmd.add_option("--beta", cfg.beta, "Haze sensitivity of lambda")->capture_default_str();
    cmd.add_option("--tau", cfg.tau, "Relaxation step")->capture_default_str();
    cmd.add_option("--t-floor", cfg.t_floor, "Transmission floor in the reconstruction")
        ->capture_default_str();
    cmd.add_option("--patch-radius", cfg.patch_radius, "Single-scale dark channel radius")
        ->capture_default_str();
    cmd.add_option("--max-iters", cfg.max_iters, "Iteration cap per channel")
        ->capture_default_str();
    cmd.add_option("--rel-tol", cfg.rel_tol, "Relative residual-change stop threshold")
        ->capture_default_str();
    cmd.add_option("--threads", cfg.workers, "Row-parallel workers (output is identical)")
        ->capture_default_str();
}

int cmd_dehaze(const DehazeArgs& args, std::ostream& err) {
    SolverConfig cfg = args.cfg;
    cfg.lambda_monotonicity = parse_monotonicity(args.monotonicity);
    const auto ablation = parse_ablation(args.ablate);
    if (!ablation) throw InvalidInput("--ablate: unknown variant '" + args.ablate + "'");
    cfg.validate();

    const ImageBuffer hazy = load_image(args.input);
    const DehazeResult result = dehaze(hazy, cfg, *ablation);
    save_image(result.image, args.output);

    for (std::size_t c = 0; c < result.diagnostics.traces.size(); ++c) {
        const SolverTrace& tr = result.diagnostics.traces[c];
        if (tr.tau_exceeds_bound()) {
            err << "warning: channel " << c << ": tau " << tr.tau_used
                << " exceeds stability bound " << tr.tau_bound << '\n';
        }
    }
    if (!args.trace_path.empty()) {
        std::ostringstream csv;
        write_trace_csv(csv, result.diagnostics.traces);
        write_text_atomically(args.trace_path, csv.str());
    }
    return 0;
}

int cmd_synthesize(const SynthesizeArgs& args) {
    if (args.t.has_value() == !args.t_map.empty()) {
        throw InvalidInput("synthesize needs exactly one of --t or --t-map");
    }
    if (args.t && !(*args.t >= 0.0 && *args.t <= 1.0)) {
        throw InvalidInput("--t must lie in [0, 1]");
    }
    std::vector<double> a = parse_airlight(args.airlight);

    const ImageBuffer clean = load_image(args.input);
    if (a.size() == 1) a.assign(clean.channels(), a.front());
    const AtmosphericLight airlight(a);

    std::optional<TransmissionMap> t;
    if (args.t) {
        t = TransmissionMap::uniform(clean.width(), clean.height(), *args.t);
    } else {
        const ImageBuffer map = load_image(args.t_map);
        if (map.channels() != 1) throw InvalidInput("--t-map must be a grayscale (P5) image");
        t = TransmissionMap(map.channel(0));
    }
    save_image(synthesize_haze(clean, *t, airlight), args.output);
    return 0;
}

int cmd_evaluate(const EvaluateArgs& args, std::ostream& out) {
    const ImageBuffer a = load_image(args.first);
    const ImageBuffer b = load_image(args.second);
    const MetricReport report = compare(a, b);
    nlohmann::ordered_json line;
    line["mse"] = report.mse;
    if (std::isinf(report.psnr)) {
        line["psnr"] = "inf";
    } else {
        line["psnr"] = report.psnr;
    }
    line["mae"] = report.mae;
    out << line.dump() << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Single-image dehazing with an edge-preserving nonlocal diffusion model",
                 "hazepde"};
    app.require_subcommand(1);

    DehazeArgs dehaze_args;
    auto* dehaze_cmd = app.add_subcommand("dehaze", "Dehaze a P5/P6 image");
    dehaze_cmd->add_option("input", dehaze_args.input, "Hazy input image")->required();
    dehaze_cmd->add_option("output", dehaze_args.output, "Output image")->required();
    add_solver_flags(*dehaze_cmd, dehaze_args.cfg);
    dehaze_cmd
        ->add_option("--ablate", dehaze_args.ablate,
                     "Disable one stage: no-pde, no-nonlocal, no-adaptive, no-edge, "
                     "no-guided, no-multiscale")
        ->capture_default_str();
    dehaze_cmd
        ->add_option("--lambda-monotonicity", dehaze_args.monotonicity,
                     "as-printed: lambda0*exp(-beta(1-t)); prose: lambda0*exp(-beta t)")
        ->capture_default_str();
    dehaze_cmd->add_option("--trace", dehaze_args.trace_path,
                           "Write per-iteration residuals as CSV");

    SynthesizeArgs synth_args;
    auto* synth_cmd = app.add_subcommand("synthesize", "Apply the haze model to a clean image");
    synth_cmd->add_option("input", synth_args.input, "Clean input image")->required();
    synth_cmd->add_option("output", synth_args.output, "Hazy output image")->required();
    synth_cmd->add_option("--t", synth_args.t, "Uniform transmission in [0,1]");
    synth_cmd->add_option("--t-map", synth_args.t_map, "Transmission map as a P5 image");
    synth_cmd->add_option("--airlight", synth_args.airlight, "Airlight R or R,G,B")
        ->required();

    EvaluateArgs eval_args;
    auto* eval_cmd = app.add_subcommand("evaluate", "Print MSE/PSNR/MAE of two images as JSON");
    eval_cmd->add_option("first", eval_args.first, "First image")->required();
    eval_cmd->add_option("second", eval_args.second, "Second image")->required();

    std::vector<const char*> argv{"hazepde"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (dehaze_cmd->parsed()) return cmd_dehaze(dehaze_args, err);
        if (synth_cmd->parsed()) return cmd_synthesize(synth_args);
        if (eval_cmd->parsed()) return cmd_evaluate(eval_args, out);
    } catch (const std::exception& e) {
        err << "hazepde: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace hazepde::cli
