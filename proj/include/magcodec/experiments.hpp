#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "magcodec/complexity.hpp"
#include "magcodec/isomorphism.hpp"
#include "magcodec/mag.hpp"
#include "magcodec/random.hpp"

namespace magcodec {

struct Topology {
    enum class Kind { kTrivial, kRandomDensity };
    Kind kind = Kind::kTrivial;
    double density = 0.5;

    static Topology trivial() { return {}; }
    static Topology random_density(double rho) { return {Kind::kRandomDensity, rho}; }
};

struct ExperimentConfig {
    std::uint64_t seed = 98; // default demo seed; always echoed in reports
    std::vector<std::uint32_t> p_values;
    Topology topology;
    std::string compressor = "lz";
    std::filesystem::path out_dir; // empty: keep rows in memory only
    std::uint32_t ones_cap = 13;   // rejection bound on ones(w)
};

// One measured experiment row; complexity fields are bits under the
// configured compressor.
struct DistortionRow {
    std::uint32_t p = 0;
    std::uint32_t ones = 0;
    std::uint64_t n_vertices = 0;
    std::uint64_t n_possible_edges = 0;
    std::uint64_t c_x = 0;
    std::uint64_t c_edgeset = 0;
    std::uint64_t c_tau = 0;
    std::uint64_t c_edgeset_given_x = 0;
    std::uint64_t c_graph_edgeset = 0;
};

struct WorstCase {
    SimpleMag mag;
    ClassicalGraph graph;
    BitBuffer w;
};

// p pseudorandom bits, redrawn until 1 <= ones(w) <= ones_cap.
BitBuffer sample_worst_case_w(std::uint64_t seed, std::uint32_t p, std::uint32_t ones_cap);

// Trivial topology: "1" followed by zeros (length >= 1).
BitBuffer trivial_characteristic(std::uint64_t length);

// Companion tuple from w, trivial characteristic string, isomorphic graph.
// Rejects all-zero w (single composite vertex, empty edge space).
WorstCase build_worst_case_from_w(const BitBuffer& w);
WorstCase build_worst_case(std::uint64_t seed, std::uint32_t p, std::uint32_t ones_cap = 13);

DistortionRow measure_row(const SimpleMag& mag, const ClassicalGraph& graph,
                          const BitBuffer& w, const Compressor& c);

std::vector<DistortionRow> run_distortion_sweep(const ExperimentConfig& cfg);
// Same pipeline with w = all-ones (uniform multidimensional space).
std::vector<DistortionRow> run_uniform_control(const ExperimentConfig& cfg);

// --- reports ----------------------------------------------------------------

std::string rows_to_csv(const std::vector<DistortionRow>& rows);
nlohmann::ordered_json report_json(const ExperimentConfig& cfg,
                                   const std::vector<DistortionRow>& rows);
std::string rows_to_svg(const std::vector<DistortionRow>& rows);

// Structural check mirroring schema/report.schema.json.
bool validate_report_json(const nlohmann::json& j, std::string* error = nullptr);

enum class ReportFormat { kCsv, kJson, kSvg };

// Writes <basename>.{csv,json,svg} into cfg.out_dir; returns written paths.
std::vector<std::filesystem::path> emit_report(const ExperimentConfig& cfg,
                                               const std::vector<DistortionRow>& rows,
                                               const std::string& basename,
                                               const std::vector<ReportFormat>& formats);

// --- small stats helpers used by the trend assertions -----------------------

double spearman_rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys);
double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys);

} // namespace magcodec
