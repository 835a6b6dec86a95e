#include "rumor/replicate.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "rumor/errors.hpp"

namespace rumor {
namespace {

constexpr NodeId kPresetNodes = 100'000;
constexpr int kPresetRuns = 100;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << content;
}

std::string histogram_file(const std::map<NodeId, std::uint64_t>& hist) {
    std::string out = "# distance count\n";
    for (const auto& [dist, count] : hist)
        out += std::to_string(dist) + " " + std::to_string(count) + "\n";
    return out;
}

} // namespace

std::vector<double> default_p_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 20; ++i) grid.push_back(i * 0.05);
    return grid;
}

ExperimentSpec preset_spec(const std::string& preset) {
    ExperimentSpec spec;
    spec.gen.n = kPresetNodes;
    spec.runs_per_cell = kPresetRuns;
    spec.p_grid = default_p_grid();
    spec.rounds = {8};
    if (preset == "table1" || preset == "fig3") {
        spec.gen.kind = GeneratorSpec::Kind::ErdosRenyi;
        spec.gen.avg_degree = 4.0;
        if (preset == "fig3") spec.p_grid = {0.45, 0.50, 0.55};
    } else if (preset == "table2") {
        spec.gen.kind = GeneratorSpec::Kind::ConfigRegular;
        spec.gen.d = 4;
    } else if (preset == "table3" || preset == "fig4") {
        spec.gen.kind = GeneratorSpec::Kind::Geometric;
        spec.gen.expected_degree = 16.0;
        if (preset == "fig4") spec.rounds = {8, 16, 32};
    } else {
        throw param_error("unknown preset: " + preset);
    }
    return spec;
}

std::vector<std::string> replicate(const std::string& preset, std::uint64_t master_seed,
                                   const std::string& out_dir, int threads) {
    ExperimentSpec spec = preset_spec(preset);
    spec.master_seed = master_seed;
    spec.threads = threads;

    std::filesystem::create_directories(out_dir);
    const auto path = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    std::vector<std::string> written;
    const SweepResult result = run_sweep(spec);

    if (preset == "fig3") {
        for (double p : spec.p_grid) {
            char name[32];
            std::snprintf(name, sizeof(name), "fig3_p%.2f.dat", p);
            const std::string file = path(name);
            write_file(file, histogram_file(distance_histogram(result, p, 8)));
            written.push_back(file);
        }
        return written;
    }
    if (preset == "fig4") {
        for (int t : spec.rounds) {
            std::vector<SummaryRow> rows;
            for (const SummaryRow& row : result.rows)
                if (row.t == t) rows.push_back(row);
            const std::string file = path("fig4_t" + std::to_string(t) + ".csv");
            write_file(file, rows_to_csv(rows));
            written.push_back(file);
        }
        return written;
    }
    const std::string csv = path(preset + ".csv");
    write_file(csv, rows_to_csv(result.rows));
    written.push_back(csv);
    const std::string runlog = path(preset + "_runlog.json");
    write_file(runlog, sweep_to_json(spec, result));
    written.push_back(runlog);
    return written;
}

} // namespace rumor
