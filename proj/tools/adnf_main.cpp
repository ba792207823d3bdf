// adnf - streaming fuzzy clustering CLI.
//
// Pipeline subcommands mirror the model's phases: `init` fits batch fuzzy
// c-means and wraps the centroids into micro-clusters, `stream` absorbs
// points one at a time, `adapt` retunes per-cluster fuzziness from entropy
// evolution, `refine` merges/splits the topology, `assign`/`eval` produce
// hard labels and the silhouette score. `pca`, `gen` and the end-to-end
// `run` round out the toolbox.
//
// Reports go to stdout as JSON lines; diagnostics go to stderr.
// Exit codes: 0 success, 1 data/config error, 2 usage error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adnf/adnf.hpp"

namespace {

using nlohmann::json;

struct CommonOptions {
    std::string config_path;
    std::uint64_t seed = 0;
    std::optional<std::size_t> clusters;
    std::optional<double> m0;
    std::optional<double> k_sigma;
    std::optional<double> eps_split;
};

// Config file first, then flag overrides.
adnf::ADNFConfig resolve_config(const CommonOptions& opts) {
    adnf::ADNFConfig cfg;
    if (!opts.config_path.empty()) {
        cfg = adnf::load_config(opts.config_path, cfg);
    }
    if (opts.clusters) cfg.c = *opts.clusters;
    if (opts.m0) cfg.m0 = *opts.m0;
    if (opts.k_sigma) cfg.k_sigma = *opts.k_sigma;
    if (opts.eps_split) cfg.eps_split = *opts.eps_split;
    cfg.validate();
    return cfg;
}

void add_config_flags(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "JSON config file");
    cmd->add_option("--seed", opts.seed, "Random seed");
    cmd->add_option("--clusters", opts.clusters, "Initial cluster count c");
    cmd->add_option("--m0", opts.m0, "Base fuzziness m0 (> 1)");
    cmd->add_option("--k-sigma", opts.k_sigma, "Split threshold std multiplier");
    cmd->add_option("--eps-split", opts.eps_split, "DBSCAN radius for splitting");
}

json report_to_json(const adnf::AbsorptionReport& r) {
    json j{{"step", r.step},
           {"created_new", r.created_new},
           {"membership", r.membership_used},
           {"learning_rate", r.learning_rate_used}};
    if (r.matched_cluster) {
        j["matched"] = *r.matched_cluster;
    } else {
        j["matched"] = nullptr;
    }
    return j;
}

json adaptation_to_json(const adnf::AdaptationReport& report) {
    json rows = json::array();
    for (const adnf::AdaptationRow& row : report.rows) {
        rows.push_back(json{{"entropy", row.entropy},
                            {"delta_entropy", row.delta_entropy},
                            {"delta_v", row.delta_v},
                            {"delta_p", row.delta_p},
                            {"fti", row.fti},
                            {"new_fuzziness", row.new_fuzziness}});
    }
    return json{{"rows", std::move(rows)}, {"median_fti", report.median_fti}};
}

json refinement_to_json(const adnf::RefinementReport& report) {
    json merges = json::array();
    for (const adnf::MergeEvent& m : report.merges) {
        merges.push_back(json{{"sources", m.sources}, {"survivor", m.survivor}});
    }
    json splits = json::array();
    for (const adnf::SplitEvent& s : report.splits) {
        splits.push_back(json{{"source", s.source}, {"new_clusters", s.new_clusters}});
    }
    json j{{"merges", std::move(merges)}, {"splits", std::move(splits)}};
    j["tau_m"] = report.tau_m ? json(*report.tau_m) : json(nullptr);
    j["tau_s"] = report.tau_s ? json(*report.tau_s) : json(nullptr);
    return j;
}

std::vector<double> current_ftis(const adnf::ModelState& state, const adnf::ADNFConfig& cfg) {
    std::vector<double> ftis;
    ftis.reserve(state.clusters.size());
    for (const adnf::MicroCluster& mc : state.clusters) {
        ftis.push_back(adnf::compute_fti(mc, cfg));
    }
    return ftis;
}

int cmd_init(const std::string& input, const std::string& out, const CommonOptions& opts) {
    const adnf::ADNFConfig cfg = resolve_config(opts);
    const adnf::FeatureMatrix x = adnf::load_features(input);
    const adnf::FuzzyPartition partition = adnf::fit_fcm(x, cfg, opts.seed);
    const adnf::ModelState state = adnf::init_micro_clusters(x, partition, cfg);
    adnf::save_model(state, cfg, out);
    std::cout << json{{"event", "init"},
                      {"clusters", state.clusters.size()},
                      {"iterations", partition.iterations_run},
                      {"objective", partition.objective},
                      {"radius", state.clusters.front().radius}}
                     .dump()
              << '\n';
    return 0;
}

int cmd_stream(const std::string& model_path, const std::string& input,
               const std::string& out) {
    adnf::LoadedModel loaded = adnf::load_model(model_path);
    const adnf::FeatureMatrix points = adnf::load_features(input);
    const std::vector<adnf::AbsorptionReport> reports =
        adnf::process_stream(points, loaded.state, loaded.config);
    for (const adnf::AbsorptionReport& r : reports) {
        std::cout << report_to_json(r).dump() << '\n';
    }
    adnf::save_model(loaded.state, loaded.config, out);
    return 0;
}

int cmd_adapt(const std::string& model_path, const std::string& out) {
    adnf::LoadedModel loaded = adnf::load_model(model_path);
    const adnf::AdaptationReport report = adnf::tune_fuzziness(loaded.state, loaded.config);
    adnf::save_model(loaded.state, loaded.config, out);
    std::cout << adaptation_to_json(report).dump() << '\n';
    return 0;
}

int cmd_refine(const std::string& model_path, const std::string& out) {
    adnf::LoadedModel loaded = adnf::load_model(model_path);
    const std::vector<double> ftis = current_ftis(loaded.state, loaded.config);
    const adnf::RefinementReport report = adnf::refine(loaded.state, ftis, loaded.config);
    adnf::save_model(loaded.state, loaded.config, out);
    std::cout << refinement_to_json(report).dump() << '\n';
    return 0;
}

int cmd_assign(const std::string& model_path, const std::string& input,
               const std::string& out) {
    const adnf::LoadedModel loaded = adnf::load_model(model_path);
    const adnf::FeatureMatrix x = adnf::load_features(input);
    const std::vector<int> labels = adnf::hard_assign(x, loaded.state);
    if (out.empty()) {
        for (int label : labels) std::cout << label << '\n';
    } else {
        adnf::save_labels(labels, out);
        std::cout << json{{"event", "assign"}, {"points", labels.size()}, {"out", out}}.dump()
                  << '\n';
    }
    return 0;
}

int cmd_eval(const std::string& input, const std::string& labels_path) {
    const adnf::FeatureMatrix x = adnf::load_features(input);
    const std::vector<int> labels = adnf::load_labels(labels_path);
    const double score = adnf::silhouette(x, labels);
    std::printf("%.4f\n", score);
    return 0;
}

int cmd_pca(const std::string& input, std::size_t components, const std::string& out) {
    const adnf::FeatureMatrix x = adnf::load_features(input);
    const adnf::PcaModel model = adnf::fit_pca(x, components);
    adnf::save_features(adnf::transform(model, x), out);
    std::cout << json{{"event", "pca"},
                      {"components", components},
                      {"explained_variance", model.explained_variance},
                      {"out", out}}
                     .dump()
              << '\n';
    return 0;
}

int cmd_gen(const std::string& spec_path, const std::string& out,
            const std::string& labels_out, std::optional<std::uint64_t> seed_override) {
    adnf::SyntheticStreamSpec spec = adnf::load_stream_spec(spec_path);
    if (seed_override) {
        spec.seed = *seed_override;
    }
    const adnf::GeneratedStream stream = adnf::generate_stream(spec);
    adnf::save_features(stream.points, out);
    if (!labels_out.empty()) {
        adnf::save_labels(stream.components, labels_out);
    }
    std::cout << json{{"event", "gen"},
                      {"points", stream.points.rows()},
                      {"dims", stream.points.cols()},
                      {"out", out}}
                     .dump()
              << '\n';
    return 0;
}

int cmd_run(const std::string& input, const CommonOptions& opts, std::size_t init_batch,
            std::size_t components, const std::string& projection_out,
            const std::string& model_out, const std::string& labels_out) {
    const adnf::ADNFConfig cfg = resolve_config(opts);
    const adnf::FeatureMatrix x = adnf::load_features(input);
    const std::size_t n = x.rows();

    // Initialization batch: max(10 c, 20% of N) unless overridden.
    std::size_t batch = init_batch > 0
                            ? init_batch
                            : std::max<std::size_t>(10 * cfg.c, n / 5);
    batch = std::min(batch, n);

    std::vector<std::vector<double>> init_rows;
    std::vector<std::vector<double>> stream_rows;
    for (std::size_t j = 0; j < n; ++j) {
        auto row = std::vector<double>(x.row(j).begin(), x.row(j).end());
        (j < batch ? init_rows : stream_rows).push_back(std::move(row));
    }

    const adnf::FuzzyPartition partition =
        adnf::fit_fcm(adnf::FeatureMatrix::from_rows(init_rows), cfg, opts.seed);
    adnf::ModelState state =
        adnf::init_micro_clusters(adnf::FeatureMatrix::from_rows(init_rows), partition, cfg);
    std::cout << json{{"event", "init"},
                      {"batch", batch},
                      {"clusters", state.clusters.size()},
                      {"iterations", partition.iterations_run},
                      {"objective", partition.objective}}
                     .dump()
              << '\n';

    const std::vector<adnf::AbsorptionReport> reports =
        adnf::process_stream(stream_rows, state, cfg);
    std::size_t created = 0;
    for (const adnf::AbsorptionReport& r : reports) {
        if (r.created_new) ++created;
    }
    std::cout << json{{"event", "stream"},
                      {"points", reports.size()},
                      {"new_clusters", created}}
                     .dump()
              << '\n';

    const adnf::AdaptationReport adaptation = adnf::tune_fuzziness(state, cfg);
    std::cout << json{{"event", "adapt"}, {"median_fti", adaptation.median_fti}}.dump() << '\n';

    std::vector<double> ftis;
    ftis.reserve(adaptation.rows.size());
    for (const adnf::AdaptationRow& row : adaptation.rows) ftis.push_back(row.fti);
    const adnf::RefinementReport refinement = adnf::refine(state, ftis, cfg);
    std::cout << json{{"event", "refine"},
                      {"merges", refinement.merges.size()},
                      {"splits", refinement.splits.size()},
                      {"clusters", state.clusters.size()}}
                     .dump()
              << '\n';

    const std::vector<int> labels = adnf::hard_assign(x, state);
    const double score = adnf::silhouette(x, labels);

    if (!projection_out.empty()) {
        const std::size_t k = std::min<std::size_t>({components, x.cols(), n - 1});
        const adnf::PcaModel pca_model = adnf::fit_pca(x, k);
        const adnf::FeatureMatrix projected = adnf::transform(pca_model, x);
        adnf::FeatureMatrix with_labels(projected.rows(), projected.cols() + 1);
        for (std::size_t j = 0; j < projected.rows(); ++j) {
            for (std::size_t c = 0; c < projected.cols(); ++c) {
                with_labels(j, c) = projected(j, c);
            }
            with_labels(j, projected.cols()) = static_cast<double>(labels[j]);
        }
        adnf::save_features(with_labels, projection_out);
    }
    if (!model_out.empty()) {
        adnf::save_model(state, cfg, model_out);
    }
    if (!labels_out.empty()) {
        adnf::save_labels(labels, labels_out);
    }

    std::cout << json{{"event", "result"},
                      {"silhouette", score},
                      {"clusters", state.clusters.size()},
                      {"points", n}}
                     .dump()
              << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adnf - adaptive streaming fuzzy clustering"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string input;
    std::string model_path;
    std::string out;
    std::string labels_path;
    std::string labels_out;
    std::string model_out;
    std::string spec_path;
    std::size_t components = 10;
    std::size_t init_batch = 0;

    CLI::App* init = app.add_subcommand("init", "Batch-initialize micro-clusters");
    init->add_option("--input", input, "Feature file (CSV or JSON)")->required();
    init->add_option("--out", out, "Output model snapshot")->required();
    add_config_flags(init, opts);

    CLI::App* stream = app.add_subcommand("stream", "Absorb points one at a time");
    stream->add_option("--model", model_path, "Input model snapshot")->required();
    stream->add_option("--input", input, "Feature file to stream")->required();
    stream->add_option("--out", out, "Output model snapshot")->required();

    CLI::App* adapt = app.add_subcommand("adapt", "Entropy-driven fuzziness retuning");
    adapt->add_option("--model", model_path, "Input model snapshot")->required();
    adapt->add_option("--out", out, "Output model snapshot")->required();

    CLI::App* refine = app.add_subcommand("refine", "Merge and split the topology");
    refine->add_option("--model", model_path, "Input model snapshot")->required();
    refine->add_option("--out", out, "Output model snapshot")->required();

    CLI::App* assign = app.add_subcommand("assign", "Hard-assign points to clusters");
    assign->add_option("--model", model_path, "Input model snapshot")->required();
    assign->add_option("--input", input, "Feature file")->required();
    assign->add_option("--out", out, "Label file (stdout when omitted)");

    CLI::App* eval = app.add_subcommand("eval", "Silhouette score of a labelling");
    eval->add_option("--input", input, "Feature file")->required();
    eval->add_option("--labels", labels_path, "Label file, one integer per line")->required();

    CLI::App* pca = app.add_subcommand("pca", "Project features onto principal components");
    pca->add_option("--input", input, "Feature file")->required();
    pca->add_option("--components", components, "Component count")->capture_default_str();
    pca->add_option("--out", out, "Output matrix file")->required();

    CLI::App* gen = app.add_subcommand("gen", "Generate a synthetic drifting stream");
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("--spec", spec_path, "Stream spec JSON")->required();
    gen->add_option("--out", out, "Output feature CSV")->required();
    gen->add_option("--labels-out", labels_out, "Ground-truth component file");
    gen->add_option("--seed", gen_seed, "Override the spec's seed");

    CLI::App* run = app.add_subcommand("run", "Full pipeline: init, stream, adapt, refine, eval");
    run->add_option("--input", input, "Feature file")->required();
    run->add_option("--init-batch", init_batch, "Points used for batch initialization");
    run->add_option("--components", components, "Projection dimension for --out")
        ->capture_default_str();
    run->add_option("--out", out, "Projection CSV (coordinates + label column)");
    run->add_option("--model-out", model_out, "Final model snapshot");
    run->add_option("--labels-out", labels_out, "Hard label file");
    add_config_flags(run, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n' << app.help() << '\n';
        return 2;
    }

    try {
        if (init->parsed()) return cmd_init(input, out, opts);
        if (stream->parsed()) return cmd_stream(model_path, input, out);
        if (adapt->parsed()) return cmd_adapt(model_path, out);
        if (refine->parsed()) return cmd_refine(model_path, out);
        if (assign->parsed()) return cmd_assign(model_path, input, out);
        if (eval->parsed()) return cmd_eval(input, labels_path);
        if (pca->parsed()) return cmd_pca(input, components, out);
        if (gen->parsed()) return cmd_gen(spec_path, out, labels_out, gen_seed);
        if (run->parsed()) {
            const std::size_t proj_components = run->count("--components") > 0 ? components : 2;
            return cmd_run(input, opts, init_batch, proj_components, out, model_out, labels_out);
        }
    } catch (const adnf::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
