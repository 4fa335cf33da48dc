#ifndef ACFBANDS_REPORT_HPP
#define ACFBANDS_REPORT_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acfbands/acf.hpp"
#include "acfbands/bands.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/simulation.hpp"

namespace acfbands {

using ordered_json = nlohmann::ordered_json;

/// Reject/cover decision attached to one band of a report.
struct BandDecision {
    std::string band;   // band kind name
    std::string check;  // "rejects_white_noise" or "covers_zero"
    bool value = false;
};

/// Everything one CLI invocation produces: the ACF, the requested bands,
/// the decisions, and free-form metadata. Serializes losslessly to JSON
/// (doubles survive the round trip bit for bit).
struct BandReport {
    AcfEstimate acf;
    std::vector<Band> bands;
    std::vector<BandDecision> decisions;
    ordered_json meta = ordered_json::object();
};

namespace detail {

inline BandKind band_kind_from_string(const std::string& s) {
    for (BandKind k : {BandKind::sig_simultaneous, BandKind::sig_pointwise, BandKind::conf_supt,
                       BandKind::conf_bonferroni, BandKind::conf_pointwise,
                       BandKind::sig_dynamic_exact, BandKind::sig_dynamic_naive}) {
        if (s == to_string(k)) return k;
    }
    throw InvalidArgument("unknown band kind: " + s);
}

} // namespace detail

inline ordered_json to_json(const Band& band) {
    ordered_json j;
    j["kind"] = to_string(band.kind);
    j["alpha"] = band.alpha;
    j["scaling_c"] = band.scaling_c;
    j["T"] = band.T;
    j["H"] = band.H;
    j["lower"] = band.lower;
    j["upper"] = band.upper;
    return j;
}

inline Band band_from_json(const ordered_json& j) {
    Band band;
    band.kind = detail::band_kind_from_string(j.at("kind").get<std::string>());
    band.alpha = j.at("alpha").get<double>();
    band.scaling_c = j.at("scaling_c").get<double>();
    band.T = j.at("T").get<int>();
    band.H = j.at("H").get<int>();
    band.lower = j.at("lower").get<std::vector<double>>();
    band.upper = j.at("upper").get<std::vector<double>>();
    if (static_cast<int>(band.lower.size()) != band.H ||
        static_cast<int>(band.upper.size()) != band.H) {
        throw InvalidArgument("band JSON: lower/upper length disagrees with H");
    }
    return band;
}

inline ordered_json to_json(const BandReport& report) {
    ordered_json j;
    ordered_json acf;
    acf["mean"] = report.acf.mean;
    acf["T"] = report.acf.T;
    acf["H"] = report.acf.H;
    acf["gamma"] = report.acf.gamma;
    acf["rho"] = std::vector<double>(report.acf.rho.begin() + 1, report.acf.rho.end());
    j["acf"] = std::move(acf);
    j["bands"] = ordered_json::array();
    for (const auto& b : report.bands) j["bands"].push_back(to_json(b));
    j["decisions"] = ordered_json::array();
    for (const auto& d : report.decisions) {
        j["decisions"].push_back({{"band", d.band}, {"check", d.check}, {"value", d.value}});
    }
    j["meta"] = report.meta;
    return j;
}

inline BandReport band_report_from_json(const ordered_json& j) {
    BandReport report;
    const auto& acf = j.at("acf");
    report.acf.mean = acf.at("mean").get<double>();
    report.acf.T = acf.at("T").get<int>();
    report.acf.H = acf.at("H").get<int>();
    report.acf.gamma = acf.at("gamma").get<std::vector<double>>();
    const auto rho = acf.at("rho").get<std::vector<double>>();
    report.acf.rho.assign(1, 1.0);
    report.acf.rho.insert(report.acf.rho.end(), rho.begin(), rho.end());
    for (const auto& b : j.at("bands")) report.bands.push_back(band_from_json(b));
    for (const auto& d : j.at("decisions")) {
        report.decisions.push_back({d.at("band").get<std::string>(),
                                    d.at("check").get<std::string>(), d.at("value").get<bool>()});
    }
    if (j.contains("meta")) report.meta = j.at("meta");
    return report;
}

/// CSV rendering: one row per lag with h, rho_hat, then lower/upper per band.
inline void write_report_csv(const BandReport& report, std::ostream& out) {
    out << "h,rho_hat";
    for (const auto& b : report.bands) {
        out << ',' << to_string(b.kind) << "_lower," << to_string(b.kind) << "_upper";
    }
    out << '\n';
    out << std::setprecision(17);
    for (int h = 1; h <= report.acf.H; ++h) {
        out << h << ',' << report.acf.rho_at(h);
        for (const auto& b : report.bands) {
            if (h <= b.H) {
                out << ',' << b.lower_at(h) << ',' << b.upper_at(h);
            } else {
                out << ",,";
            }
        }
        out << '\n';
    }
}

inline ordered_json to_json(const SimConfig& cfg) {
    ordered_json j;
    j["study"] = to_string(cfg.study);
    j["dgp"] = {{"order", cfg.dgp.order}, {"phi1", cfg.dgp.phi1}, {"phi2", cfg.dgp.phi2}};
    j["T"] = cfg.T;
    j["H"] = cfg.H;
    j["alpha"] = cfg.alpha;
    j["reps"] = cfg.reps;
    j["seed"] = cfg.seed;
    j["bandwidth"] = cfg.bandwidth.describe();
    j["burn_in"] = cfg.burn_in;
    j["prob_tol"] = cfg.prob_tol;
    return j;
}

inline ordered_json to_json(const SimResult& res) {
    ordered_json j;
    j["config"] = to_json(res.config);
    j["reps_used"] = res.reps_used;
    ordered_json freq = ordered_json::object();
    for (const auto& [k, v] : res.rejection_or_coverage) freq[k] = v;
    j["rejection_or_coverage"] = std::move(freq);
    ordered_json width = ordered_json::object();
    for (const auto& [k, v] : res.avg_width) width[k] = v;
    j["avg_width"] = std::move(width);
    j["degenerate_tests"] = res.degenerate_tests;
    return j;
}

/// Aligned text table of a study's results: one row per method, frequency
/// and average width columns.
inline std::string render_table(const SimResult& res) {
    std::ostringstream out;
    const auto& cfg = res.config;
    out << "study=" << to_string(cfg.study) << "  dgp=AR(" << cfg.dgp.order << ") phi1=" << cfg.dgp.phi1;
    if (cfg.dgp.order == 2) out << " phi2=" << cfg.dgp.phi2;
    out << "  T=" << cfg.T << "  H=" << cfg.H << "  alpha=" << cfg.alpha
        << "  reps=" << res.reps_used << "  seed=" << cfg.seed << '\n';

    const char* freq_label =
        (cfg.study == StudyKind::confidence || cfg.study == StudyKind::bandwidth_sweep)
            ? "coverage"
            : "rejection";
    std::size_t name_w = 10;
    for (const auto& [k, v] : res.rejection_or_coverage) name_w = std::max(name_w, k.size());

    out << std::left << std::setw(static_cast<int>(name_w) + 2) << "method" << std::right
        << std::setw(10) << freq_label << std::setw(12) << "avg_width" << '\n';
    for (const auto& [k, v] : res.rejection_or_coverage) {
        out << std::left << std::setw(static_cast<int>(name_w) + 2) << k << std::right
            << std::setw(10) << std::fixed << std::setprecision(3) << v;
        bool has_width = false;
        for (const auto& [wk, wv] : res.avg_width) {
            if (wk == k) {
                out << std::setw(12) << std::setprecision(3) << wv;
                has_width = true;
                break;
            }
        }
        if (!has_width) out << std::setw(12) << "-";
        out << '\n';
        out.unsetf(std::ios::fixed);
    }
    if (res.degenerate_tests > 0) {
        out << "(degenerate auxiliary regressions reported as non-rejections: "
            << res.degenerate_tests << ")\n";
    }
    return out.str();
}

} // namespace acfbands

#endif
