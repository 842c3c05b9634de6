#include "gapcert/runconfig.hpp"

#include <CLI11.hpp>

#include <string>

int main(int argc, char** argv) {
    CLI::App app{"gapcert: spectral-gap certificates and random-cover tooling for the Bolza family"};
    app.require_subcommand(1);

    gapcert::cli::RunConfig cfg;
    std::string d_str = "3/4", lambda_str = "2501/10000";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--precision", cfg.precision, "working precision in bits")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "master RNG seed")->capture_default_str();
        sub->add_option("--out", cfg.out, "output file (default: stdout)");
        sub->add_option("--format", cfg.format, "output format: json|csv")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker thread cap (0 = hardware)")
            ->capture_default_str();
    };

    CLI::App* certify = app.add_subcommand("certify", "run the spectral-gap certificate");
    certify->add_option("--d", d_str, "test-function parameter (rational)")
        ->capture_default_str();
    certify->add_option("--lambda", lambda_str, "target eigenvalue bound (rational)")
        ->capture_default_str();
    certify->add_option("--word-bound", cfg.word_bound, "word-length cap for class search")
        ->capture_default_str();
    add_common(certify);

    CLI::App* classes = app.add_subcommand("classes", "export geodesic conjugacy classes");
    classes->add_option("--L", cfg.L, "translation length bound")->capture_default_str();
    classes->add_option("--word-bound", cfg.word_bound, "word-length cap for class search")
        ->capture_default_str();
    add_common(classes);

    CLI::App* covers = app.add_subcommand("covers", "sample a random permutation cover");
    covers->add_option("--n", cfg.n, "cover degree")->capture_default_str();
    add_common(covers);

    CLI::App* stats = app.add_subcommand("stats", "Monte-Carlo cycle statistics");
    stats->add_option("--word", cfg.word, "F2 word, e.g. X or X*Y^-1")->capture_default_str();
    stats->add_option("--cycle", cfg.cycle_length, "cycle length c")->capture_default_str();
    stats->add_option("--n", cfg.n, "permutation degree")->capture_default_str();
    stats->add_option("--samples", cfg.samples, "number of samples")->capture_default_str();
    add_common(stats);

    CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound calculators");
    bounds->add_option("--sys", cfg.sys, "systole input")->capture_default_str();
    bounds->add_option("--ell", cfg.ell, "collar length input")->capture_default_str();
    bounds->add_option("--eta", cfg.eta, "density target eta")->capture_default_str();
    bounds->add_option("--w", cfg.w, "collar width w")->capture_default_str();
    bounds->add_option("--A", cfg.A, "delocalization constant A")->capture_default_str();
    bounds->add_option("--B", cfg.B, "flattening constant B")->capture_default_str();
    bounds->add_option("--eps", cfg.eps, "flattening admissibility eps")->capture_default_str();
    add_common(bounds);

    CLI::App* pipeline = app.add_subcommand("pipeline", "desk-scale cover/switch pipeline demo");
    pipeline->add_option("--n", cfg.n, "cover degree")->capture_default_str();
    pipeline->add_option("--L", cfg.L, "screening length bound")->capture_default_str();
    pipeline->add_option("--retries", cfg.retries, "transitivity resampling cap")
        ->capture_default_str();
    pipeline->add_option("--surface-word-len", cfg.surface_word_len,
                         "word length for the screening class search")
        ->capture_default_str();
    pipeline->add_option("--eta", cfg.eta, "density target eta")->capture_default_str();
    pipeline->add_option("--w", cfg.w, "collar width w")->capture_default_str();
    pipeline->add_option("--A", cfg.A, "delocalization constant A")->capture_default_str();
    pipeline->add_option("--B", cfg.B, "flattening constant B")->capture_default_str();
    pipeline->add_option("--eps", cfg.eps, "flattening admissibility eps")
        ->capture_default_str();
    add_common(pipeline);

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.d = mpq_class(d_str);
        cfg.d.canonicalize();
        cfg.lambda_max = mpq_class(lambda_str);
        cfg.lambda_max.canonicalize();
    } catch (const std::exception&) {
        std::fprintf(stderr, "invalid rational parameter\n");
        return gapcert::cli::InputError;
    }

    for (CLI::App* sub :
         {certify, classes, covers, stats, bounds, pipeline})
        if (sub->parsed()) cfg.command = sub->get_name();

    return gapcert::cli::run_command(cfg);
}
