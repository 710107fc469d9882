// Command-line front end: every subcommand is a thin wrapper over one or two
// library calls, with file-based I/O, a JSON manifest per run, and optional
// JSON mirrors of each output.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <tdats/tdats.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tdats;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOptions {
    std::string input;
    std::string output;
    bool json_mirror = false;
    std::uint64_t seed = 0;
    int threads = 1;
};

json feature_json(const PersistenceDiagram& diagram) {
    json features = json::array();
    for (const auto& f : diagram.features) {
        features.push_back({f.dim, f.birth, f.death});
    }
    return {{"maxscale", diagram.maxscale}, {"features", features}};
}

void mirror_if_requested(const CommonOptions& common, const fs::path& path, const json& value) {
    if (!common.json_mirror) return;
    std::ofstream out(path.string() + ".json");
    out << value.dump(2) << '\n';
}

void write_diagram_output(const CommonOptions& common, const fs::path& path,
                          const PersistenceDiagram& diagram) {
    write_diagram(path, diagram);
    mirror_if_requested(common, path, feature_json(diagram));
}

void write_rows_output(const CommonOptions& common, const fs::path& path,
                       const std::vector<std::vector<double>>& rows,
                       const std::vector<std::string>& header = {}) {
    write_rows(path, rows, header);
    json mirrored = {{"rows", rows}};
    if (!header.empty()) mirrored["header"] = header;
    mirror_if_requested(common, path, mirrored);
}

// Every run writes <output>.manifest.json echoing the resolved parameters;
// `rerun` replays one.
void write_manifest(const std::string& subcommand, const CommonOptions& common,
                    const json& parameters, const std::vector<std::string>& outputs) {
    json manifest{{"tool", "tdats"},
                  {"version", kVersion},
                  {"subcommand", subcommand},
                  {"input", common.input},
                  {"output", common.output},
                  {"outputs", outputs},
                  {"seed", common.seed},
                  {"threads", common.threads},
                  {"json_mirror", common.json_mirror},
                  {"parameters", parameters}};
    std::ofstream out(common.output + ".manifest.json");
    out << manifest.dump(2) << '\n';
}

// Ordered map-reduce over column indices with a fixed-size worker pool;
// results land in input order regardless of thread count.
template <typename Work>
auto for_each_column(const std::vector<std::size_t>& columns, int threads, Work work) {
    using Result = decltype(work(std::size_t{0}));
    std::vector<Result> results(columns.size());
    if (threads <= 1 || columns.size() <= 1) {
        for (std::size_t i = 0; i < columns.size(); ++i) results[i] = work(columns[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(columns.size()));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= columns.size()) break;
                    results[i] = work(columns[i]);
                }
            } catch (...) {
                errors[static_cast<std::size_t>(w)] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    return results;
}

std::vector<std::size_t> resolve_columns(const Table& table, int column) {
    if (column < 0) {
        std::vector<std::size_t> all(table.column_count());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    return {static_cast<std::size_t>(column)};
}

// ---- subcommand implementations over resolved parameter sets ----

void run_embed(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    const TimeSeries series = series_from_column(table, params.at("column").get<std::size_t>());
    const PointCloud cloud =
        takens_embed(series, params.at("d").get<int>(), params.at("tau").get<int>());
    std::vector<std::vector<double>> rows(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        rows[i].assign(p.begin(), p.end());
    }
    write_rows_output(common, common.output, rows);
    write_manifest("embed", common, params, {common.output});
}

void run_rips(const CommonOptions& common, const json& params) {
    DistanceMatrix dist;
    if (params.at("distances").get<bool>()) {
        dist = read_distance_matrix(common.input);
    } else {
        dist = distance_matrix(read_point_cloud(common.input),
                               metric_from_name(params.at("metric").get<std::string>()));
    }
    const double maxscale = params.at("maxscale").is_null()
                                ? dist.max_entry()
                                : params.at("maxscale").get<double>();
    const PersistenceDiagram diagram =
        rips_persistence(dist, params.at("maxdim").get<int>(), maxscale);
    write_diagram_output(common, common.output, diagram);
    write_manifest("rips", common, params, {common.output});
}

void run_sublevel(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    const TimeSeries series = series_from_column(table, params.at("column").get<std::size_t>());
    const PersistenceDiagram diagram = sublevel_persistence_1d({series.values(), 1.0});
    write_diagram_output(common, common.output, diagram);
    write_manifest("sublevel", common, params, {common.output});
}

void run_dtm(const CommonOptions& common, const json& params) {
    const PointCloud cloud = read_point_cloud(common.input);
    const double m0 = params.at("m0").get<double>();
    const double step = params.at("step").get<double>();
    const std::string diagram_path = params.at("diagram").get<std::string>();

    std::vector<std::string> outputs{common.output};
    if (cloud.dim() == 2) {
        const GridFunction2D grid = dtm_grid(cloud, step, m0);
        std::vector<std::vector<double>> rows(grid.rows);
        for (std::size_t r = 0; r < grid.rows; ++r) {
            rows[r].assign(grid.values.begin() + static_cast<long>(r * grid.cols),
                           grid.values.begin() + static_cast<long>((r + 1) * grid.cols));
        }
        write_rows_output(common, common.output, rows);
        if (!diagram_path.empty()) {
            write_diagram_output(common, diagram_path, grid_sublevel_persistence_h0(grid));
            outputs.push_back(diagram_path);
        }
    } else if (cloud.dim() == 1) {
        double lo = cloud.coord(0, 0);
        double hi = lo;
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            lo = std::min(lo, cloud.coord(i, 0));
            hi = std::max(hi, cloud.coord(i, 0));
        }
        std::vector<double> query_data;
        for (double x = lo; x <= hi; x += step) query_data.push_back(x);
        if (query_data.size() < 2) throw ParameterError("dtm step too coarse for the cloud extent");
        const PointCloud queries(1, std::move(query_data));
        const std::vector<double> values = dtm(cloud, queries, m0);
        std::vector<std::vector<double>> rows(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) rows[i] = {values[i]};
        write_rows_output(common, common.output, rows);
        if (!diagram_path.empty()) {
            write_diagram_output(common, diagram_path, sublevel_persistence_1d({values, step}));
            outputs.push_back(diagram_path);
        }
    } else {
        throw ParameterError("dtm subcommand supports 1-D and 2-D clouds");
    }
    write_manifest("dtm", common, params, outputs);
}

void run_distance(const CommonOptions& common, const json& params) {
    const PersistenceDiagram a = read_diagram(common.input);
    const PersistenceDiagram b = read_diagram(params.at("input_b").get<std::string>());
    const std::string kind = params.at("kind").get<std::string>();
    const int dim = params.at("dim").get<int>();
    double value = 0.0;
    if (kind == "bottleneck") {
        value = bottleneck(a, b, dim);
    } else if (kind == "wasserstein") {
        value = wasserstein(a, b, params.at("q").get<int>(), dim);
    } else {
        throw ParameterError("distance kind must be bottleneck or wasserstein");
    }
    std::ofstream out(common.output);
    out << format_double(value) << '\n';
    mirror_if_requested(common, common.output, json{{"value", value}});
    write_manifest("distance", common, params, {common.output});
}

void run_landscape(const CommonOptions& common, const json& params) {
    if (params.at("wft_batch").get<bool>()) {
        const Table table = read_table(common.input);
        std::vector<std::size_t> columns(table.column_count());
        std::iota(columns.begin(), columns.end(), 0);
        const auto transforms = for_each_column(columns, common.threads, [&](std::size_t c) {
            return wft(series_from_column(table, c)).coeffs;
        });
        const auto rows =
            first_order_pl_batch(transforms, params.at("grid_points").get<std::size_t>());
        write_rows_output(common, common.output, rows);
        write_manifest("landscape", common, params, {common.output});
        return;
    }
    const PersistenceDiagram diagram = read_diagram(common.input);
    const int dim = params.at("dim").get<int>();
    const std::size_t grid_points = params.at("grid_points").get<std::size_t>();
    const PersistenceLandscape pl =
        params.at("lo").is_null() || params.at("hi").is_null()
            ? landscape(diagram, dim, grid_points)
            : landscape(diagram, dim, grid_points, params.at("lo").get<double>(),
                        params.at("hi").get<double>());
    std::vector<std::vector<double>> rows(pl.grid.size());
    for (std::size_t l = 0; l < pl.grid.size(); ++l) {
        rows[l].reserve(1 + pl.layers.size());
        rows[l].push_back(pl.grid[l]);
        for (const auto& layer : pl.layers) rows[l].push_back(layer[l]);
    }
    write_rows_output(common, common.output, rows);
    write_manifest("landscape", common, params, {common.output});
}

void run_spectrum(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    const TimeSeries series = series_from_column(table, params.at("column").get<std::size_t>());
    const Spectrum spectrum = tapered_smoothed_periodogram(
        series, params.at("taper").get<double>(), params.at("spans").get<std::vector<int>>());
    std::vector<std::vector<double>> rows(spectrum.freqs.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i] = {spectrum.freqs[i], spectrum.power[i]};
    }
    write_rows_output(common, common.output, rows);
    write_manifest("spectrum", common, params, {common.output});
}

void run_wft(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    const TimeSeries series = series_from_column(table, params.at("column").get<std::size_t>());
    const WalshTransform transform = wft(series);
    std::vector<std::vector<double>> rows(transform.coeffs.size());
    for (std::size_t j = 0; j < rows.size(); ++j) {
        rows[j] = {static_cast<double>(j), transform.coeffs[j]};
    }
    write_rows_output(common, common.output, rows);
    write_manifest("wft", common, params, {common.output});
}

void run_sw1pers(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    const std::vector<std::size_t> columns =
        resolve_columns(table, params.at("column").get<int>());
    const int d = params.at("d").get<int>();
    const int n_points = params.at("n_points").get<int>();
    const int denoise = params.at("denoise").get<int>();
    const std::string diagram_path = params.at("diagram").get<std::string>();

    struct ColumnScore {
        double score;
        PersistenceDiagram diagram;
    };
    const auto scored = for_each_column(columns, common.threads, [&](std::size_t c) {
        const PointCloud cloud = sw1pers_cloud(series_from_column(table, c), d, n_points, denoise);
        PersistenceDiagram diagram = rips_persistence(cloud, 1, std::sqrt(3.0));
        const double score = sw1pers_score(diagram);
        return ColumnScore{score, std::move(diagram)};
    });

    std::vector<std::vector<double>> rows(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
        rows[i] = {static_cast<double>(columns[i]), scored[i].score};
    }
    write_rows_output(common, common.output, rows, {"column", "score"});
    std::vector<std::string> outputs{common.output};
    if (!diagram_path.empty()) {
        if (columns.size() != 1) {
            throw ParameterError("--diagram requires a single selected column");
        }
        write_diagram_output(common, diagram_path, scored[0].diagram);
        outputs.push_back(diagram_path);
    }
    write_manifest("sw1pers", common, params, outputs);
}

void run_features(const CommonOptions& common, const json& params) {
    const std::string kind = params.at("kind").get<std::string>();
    if (kind == "lifetime") {
        const LifetimeFeatures features = lifetime_features(read_diagram(common.input));
        std::vector<double> row;
        std::vector<std::string> header;
        for (int dim = 0; dim <= 1; ++dim) {
            const auto& stats = features.per_dim[static_cast<std::size_t>(dim)];
            const std::string suffix = std::to_string(dim);
            header.insert(header.end(),
                          {"count" + suffix, "max" + suffix, "relevant" + suffix, "mean" + suffix,
                           "sum" + suffix});
            row.insert(row.end(),
                       {static_cast<double>(stats.count), stats.max_lifetime,
                        static_cast<double>(stats.relevant_count), stats.mean_lifetime,
                        stats.sum_lifetime});
        }
        write_rows_output(common, common.output, {row}, header);
    } else if (kind == "betti") {
        const std::size_t n_grid = params.at("n_grid").get<std::size_t>();
        const std::vector<int> betti = betti_concat(read_diagram(common.input), n_grid);
        std::vector<double> row(betti.begin(), betti.end());
        std::vector<std::string> header;
        header.reserve(row.size());
        for (int dim = 0; dim <= 1; ++dim) {
            for (std::size_t l = 0; l < n_grid; ++l) {
                header.push_back("d" + std::to_string(dim) + "_" + std::to_string(l));
            }
        }
        write_rows_output(common, common.output, {row}, header);
    } else if (kind == "breaks") {
        const Table table = read_table(common.input);
        const TimeSeries series =
            series_from_column(table, params.at("column").get<std::size_t>());
        const auto features = window_break_features(series, params.at("window").get<int>(),
                                                    params.at("embed_d").get<int>());
        std::vector<std::vector<double>> rows(features.size());
        for (std::size_t i = 0; i < features.size(); ++i) {
            rows[i] = {static_cast<double>(features[i].window), features[i].level,
                       features[i].diff, features[i].landscape_l1};
        }
        write_rows_output(common, common.output, rows, {"window", "level", "diff", "landscape_l1"});
    } else {
        throw ParameterError("features kind must be lifetime, betti or breaks");
    }
    write_manifest("features", common, params, {common.output});
}

void run_cluster(const CommonOptions& common, const json& params) {
    const Table table = read_table(common.input);
    if (table.row_count() == 0) throw ParseError("feature table is empty");
    std::vector<std::vector<double>> points(table.row_count());
    for (std::size_t r = 0; r < table.row_count(); ++r) {
        points[r].resize(table.column_count());
        for (std::size_t c = 0; c < table.column_count(); ++c) points[r][c] = table.data[c][r];
    }
    const KMeansResult result = kmeans(points, params.at("k").get<int>(), common.seed,
                                       params.at("max_iter").get<int>());
    {
        std::ofstream out(common.output);
        out << "label\n";
        for (int label : result.labels) out << label << '\n';
    }
    mirror_if_requested(common, common.output, json{{"labels", result.labels}});
    std::vector<std::string> outputs{common.output};
    const std::string centers_path = params.at("centers").get<std::string>();
    if (!centers_path.empty()) {
        write_rows_output(common, centers_path, result.centers);
        outputs.push_back(centers_path);
    }
    json enriched = params;
    enriched["inertia"] = result.inertia;
    enriched["iterations"] = result.iterations;
    write_manifest("cluster", common, enriched, outputs);
}

void dispatch(const std::string& subcommand, const CommonOptions& common, const json& params) {
    if (subcommand == "embed") return run_embed(common, params);
    if (subcommand == "rips") return run_rips(common, params);
    if (subcommand == "sublevel") return run_sublevel(common, params);
    if (subcommand == "dtm") return run_dtm(common, params);
    if (subcommand == "distance") return run_distance(common, params);
    if (subcommand == "landscape") return run_landscape(common, params);
    if (subcommand == "spectrum") return run_spectrum(common, params);
    if (subcommand == "wft") return run_wft(common, params);
    if (subcommand == "sw1pers") return run_sw1pers(common, params);
    if (subcommand == "features") return run_features(common, params);
    if (subcommand == "cluster") return run_cluster(common, params);
    throw ParameterError("unknown subcommand '" + subcommand + "'");
}

void run_rerun(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw ParseError("manifest not found: " + manifest_path, "file-not-found");
    json manifest;
    try {
        in >> manifest;
    } catch (const json::exception& e) {
        throw ParseError("manifest is not valid JSON: " + std::string(e.what()));
    }
    CommonOptions common;
    common.input = manifest.at("input").get<std::string>();
    common.output = manifest.at("output").get<std::string>();
    common.json_mirror = manifest.at("json_mirror").get<bool>();
    common.seed = manifest.at("seed").get<std::uint64_t>();
    common.threads = manifest.at("threads").get<int>();
    dispatch(manifest.at("subcommand").get<std::string>(), common,
             manifest.at("parameters"));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological feature extraction for time series"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    CommonOptions common;
    const auto add_common = [&common](CLI::App* cmd, bool needs_input = true) {
        if (needs_input) {
            cmd->add_option("-i,--input", common.input, "input file")->required();
        }
        cmd->add_option("-o,--output", common.output, "output file")->required();
        cmd->add_flag("--json", common.json_mirror, "also write JSON mirrors of outputs");
        cmd->add_option("--seed", common.seed, "seed for any randomised step");
        cmd->add_option("--threads", common.threads, "worker pool size for batch inputs")
            ->check(CLI::PositiveNumber);
    };

    // embed
    auto* embed = app.add_subcommand("embed", "delay-embed a series column into a point cloud");
    int embed_column = 0, embed_d = 2, embed_tau = 1;
    add_common(embed);
    embed->add_option("--column", embed_column, "series column (default 0)");
    embed->add_option("-d,--dimension", embed_d, "embedding dimension")->required();
    embed->add_option("--tau", embed_tau, "embedding delay")->required();

    // rips
    auto* rips = app.add_subcommand("rips", "Rips persistence of a cloud or distance matrix");
    bool rips_distances = false;
    std::string rips_metric = "euclidean";
    int rips_maxdim = 1;
    double rips_maxscale = -1.0;
    add_common(rips);
    rips->add_flag("--distances", rips_distances, "input is a precomputed distance matrix");
    rips->add_option("--metric", rips_metric, "euclidean|manhattan|maximum");
    rips->add_option("--maxdim", rips_maxdim, "maximum homology dimension (0 or 1)");
    rips->add_option("--maxscale", rips_maxscale, "filtration cap (default: max distance)");

    // sublevel
    auto* sublevel = app.add_subcommand("sublevel", "sublevel persistence of a sampled function");
    int sublevel_column = 0;
    add_common(sublevel);
    sublevel->add_option("--column", sublevel_column, "series column (default 0)");

    // dtm
    auto* dtm_cmd = app.add_subcommand("dtm", "distance-to-measure on a covering grid");
    double dtm_m0 = 0.05, dtm_step = 0.065;
    std::string dtm_diagram;
    add_common(dtm_cmd);
    dtm_cmd->add_option("--m0", dtm_m0, "mass parameter in (0,1), default 0.05");
    dtm_cmd->add_option("--step", dtm_step, "grid step, default 0.065");
    dtm_cmd->add_option("--diagram", dtm_diagram, "also write the sublevel H0 diagram here");

    // distance
    auto* distance = app.add_subcommand("distance", "distance between two diagrams");
    std::string distance_kind = "bottleneck", distance_b;
    int distance_q = 1, distance_dim = 0;
    add_common(distance);
    distance->add_option("--kind", distance_kind, "bottleneck|wasserstein");
    distance->add_option("-b,--input-b", distance_b, "second diagram")->required();
    distance->add_option("-q,--degree", distance_q, "Wasserstein degree (default 1)");
    distance->add_option("--dim", distance_dim, "homology dimension (default 0)");

    // landscape
    auto* landscape_cmd = app.add_subcommand("landscape", "persistence landscapes");
    int landscape_dim = 0;
    std::size_t landscape_grid = 500;
    double landscape_lo = 0.0, landscape_hi = 0.0;
    bool landscape_batch = false, landscape_has_lo = false, landscape_has_hi = false;
    add_common(landscape_cmd);
    landscape_cmd->add_option("--dim", landscape_dim, "homology dimension (default 0)");
    landscape_cmd->add_option("--grid-points", landscape_grid, "grid size (default 500)");
    landscape_cmd->add_option("--lo", landscape_lo, "grid lower bound (default: min birth)")
        ->each([&](const std::string&) { landscape_has_lo = true; });
    landscape_cmd->add_option("--hi", landscape_hi, "grid upper bound (default: max death)")
        ->each([&](const std::string&) { landscape_has_hi = true; });
    landscape_cmd->add_flag("--wft-batch", landscape_batch,
                            "treat input as a series table; emit first-order landscape rows "
                            "of each column's Walsh transform");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "tapered smoothed periodogram");
    int spectrum_column = 0;
    double spectrum_taper = 0.1;
    std::vector<int> spectrum_spans{1};
    add_common(spectrum);
    spectrum->add_option("--column", spectrum_column, "series column (default 0)");
    spectrum->add_option("--taper", spectrum_taper, "taper proportion per end (default 0.1)");
    spectrum->add_option("--spans", spectrum_spans, "modified Daniell spans (default 1)");

    // wft
    auto* wft_cmd = app.add_subcommand("wft", "Walsh-Fourier transform of a series column");
    int wft_column = 0;
    add_common(wft_cmd);
    wft_cmd->add_option("--column", wft_column, "series column (default 0)");

    // sw1pers
    auto* sw1pers = app.add_subcommand("sw1pers", "sliding-window periodicity scores");
    int sw_column = -1, sw_d = 15, sw_n = 201, sw_denoise = 5;
    std::string sw_diagram;
    add_common(sw1pers);
    sw1pers->add_option("--column", sw_column, "series column (default: all columns)");
    sw1pers->add_option("-d,--dimension", sw_d, "window dimension (default 15)");
    sw1pers->add_option("-N,--points", sw_n, "cloud size (default 201)");
    sw1pers->add_option("--denoise", sw_denoise, "moving-average window, <=1 disables (default 5)");
    sw1pers->add_option("--diagram", sw_diagram, "also write the diagram (single column only)");

    // features
    auto* features = app.add_subcommand("features", "diagram and break-detection features");
    std::string features_kind;
    std::size_t features_grid = 300;
    int features_window = 50, features_embed = 4, features_column = 0;
    add_common(features);
    features->add_option("--kind", features_kind, "lifetime|betti|breaks")->required();
    features->add_option("--n-grid", features_grid, "Betti grid size (default 300)");
    features->add_option("--window", features_window, "break window size (default 50)");
    features->add_option("--embed-d", features_embed, "break embedding dimension (default 4)");
    features->add_option("--column", features_column, "series column for breaks (default 0)");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "k-means over a feature matrix");
    int cluster_k = 0, cluster_max_iter = 100;
    std::string cluster_centers;
    add_common(cluster);
    cluster->add_option("-K,--clusters", cluster_k, "number of clusters")->required();
    cluster->add_option("--max-iter", cluster_max_iter, "Lloyd iteration cap (default 100)");
    cluster->add_option("--centers", cluster_centers, "also write final centers here");

    // rerun
    auto* rerun = app.add_subcommand("rerun", "replay a run from its manifest");
    std::string rerun_manifest;
    rerun->add_option("-m,--manifest", rerun_manifest, "manifest file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: parameter: " << e.what() << '\n';
        return 2;
    }

    try {
        if (embed->parsed()) {
            dispatch("embed", common,
                     {{"column", embed_column}, {"d", embed_d}, {"tau", embed_tau}});
        } else if (rips->parsed()) {
            json params{{"distances", rips_distances},
                        {"metric", rips_metric},
                        {"maxdim", rips_maxdim},
                        {"maxscale", nullptr}};
            if (rips->count("--maxscale") > 0) params["maxscale"] = rips_maxscale;
            dispatch("rips", common, params);
        } else if (sublevel->parsed()) {
            dispatch("sublevel", common, {{"column", sublevel_column}});
        } else if (dtm_cmd->parsed()) {
            dispatch("dtm", common,
                     {{"m0", dtm_m0}, {"step", dtm_step}, {"diagram", dtm_diagram}});
        } else if (distance->parsed()) {
            dispatch("distance", common,
                     {{"kind", distance_kind},
                      {"input_b", distance_b},
                      {"q", distance_q},
                      {"dim", distance_dim}});
        } else if (landscape_cmd->parsed()) {
            json params{{"wft_batch", landscape_batch},
                        {"dim", landscape_dim},
                        {"grid_points", landscape_grid},
                        {"lo", nullptr},
                        {"hi", nullptr}};
            if (landscape_has_lo) params["lo"] = landscape_lo;
            if (landscape_has_hi) params["hi"] = landscape_hi;
            dispatch("landscape", common, params);
        } else if (spectrum->parsed()) {
            dispatch("spectrum", common,
                     {{"column", spectrum_column},
                      {"taper", spectrum_taper},
                      {"spans", spectrum_spans}});
        } else if (wft_cmd->parsed()) {
            dispatch("wft", common, {{"column", wft_column}});
        } else if (sw1pers->parsed()) {
            dispatch("sw1pers", common,
                     {{"column", sw_column},
                      {"d", sw_d},
                      {"n_points", sw_n},
                      {"denoise", sw_denoise},
                      {"diagram", sw_diagram}});
        } else if (features->parsed()) {
            dispatch("features", common,
                     {{"kind", features_kind},
                      {"n_grid", features_grid},
                      {"window", features_window},
                      {"embed_d", features_embed},
                      {"column", features_column}});
        } else if (cluster->parsed()) {
            dispatch("cluster", common,
                     {{"k", cluster_k},
                      {"max_iter", cluster_max_iter},
                      {"centers", cluster_centers}});
        } else if (rerun->parsed()) {
            run_rerun(rerun_manifest);
        }
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
        return 3;
    } catch (const DegenerateInputError& e) {
        std::cerr << "error: " << e.code() << ": " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
