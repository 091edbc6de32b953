// tracekit: experiment runner for trace-function sums, transforms and
// inequality reports. Emits JSON reports plus CSV tables for plotting.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracekit/bounds.hpp"
#include "tracekit/calibration.hpp"
#include "tracekit/equidist.hpp"
#include "tracekit/mellin.hpp"
#include "tracekit/table_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace tracekit;

namespace {

struct ExperimentConfig {
    std::string command;
    std::vector<std::uint64_t> moduli;       // primes or general moduli
    std::string family = "birch";
    std::uint64_t kloosterman_a = 1;
    unsigned inverse_power_k = 1;
    std::vector<std::int64_t> poly{0, 0, 0, 1};  // default X^3
    std::vector<std::uint64_t> lengths;
    std::uint64_t seed = 1;
    int random_placements = 10;
    std::optional<double> conductor;
    fs::path out_dir = ".";
    fs::path cache_dir;

    json echo() const {
        json j{{"command", command},
               {"moduli", moduli},
               {"family", family},
               {"kloosterman_a", kloosterman_a},
               {"inverse_power_k", inverse_power_k},
               {"poly", poly},
               {"lengths", lengths},
               {"seed", seed},
               {"random_placements", random_placements},
               {"out_dir", out_dir.string()},
               {"cache_dir", cache_dir.string()},
               {"calibration",
                json{{"c_transfer", calibration::kCTransfer},
                     {"c_transfer_provenance", calibration::kCTransferProvenance},
                     {"kappa0", calibration::kKappa0},
                     {"kappa0_provenance", calibration::kKappa0Provenance},
                     {"tail_slack", calibration::kTailSlack},
                     {"tail_slack_provenance", calibration::kTailSlackProvenance}}}};
        j["conductor"] = conductor ? json(*conductor) : json(nullptr);
        return j;
    }
};

void apply_config_file(ExperimentConfig& cfg, const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    if (j.contains("moduli")) cfg.moduli = j["moduli"].get<std::vector<std::uint64_t>>();
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("kloosterman_a")) cfg.kloosterman_a = j["kloosterman_a"].get<std::uint64_t>();
    if (j.contains("inverse_power_k"))
        cfg.inverse_power_k = j["inverse_power_k"].get<unsigned>();
    if (j.contains("poly")) cfg.poly = j["poly"].get<std::vector<std::int64_t>>();
    if (j.contains("lengths")) cfg.lengths = j["lengths"].get<std::vector<std::uint64_t>>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("random_placements"))
        cfg.random_placements = j["random_placements"].get<int>();
    if (j.contains("conductor") && !j["conductor"].is_null())
        cfg.conductor = j["conductor"].get<double>();
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
}

// ---- table construction with optional binary cache --------------------

std::string family_key(const ExperimentConfig& cfg, std::uint64_t m) {
    std::string key = cfg.family;
    if (cfg.family == "kloosterman") key += "_a" + std::to_string(cfg.kloosterman_a);
    if (cfg.family == "invk")
        key += "_a" + std::to_string(cfg.kloosterman_a) + "_k" +
               std::to_string(cfg.inverse_power_k);
    return key + "_m" + std::to_string(m);
}

FunctionTable build_family_table(const ExperimentConfig& cfg, const Modulus& m) {
    const std::string& f = cfg.family;
    if (f == "ones")
        return FunctionTable(m, std::vector<cplx>(m.value(), cplx{1.0, 0.0}));
    if (f == "gauss") return polynomial_phase_table({0, 0, 1}, m);
    if (f == "legendre") {
        std::vector<cplx> v(m.value());
        for (std::uint64_t n = 0; n < m.value(); ++n)
            v[n] = cplx{static_cast<double>(legendre_symbol(n, m)), 0.0};
        return FunctionTable(m, std::move(v));
    }
    if (f == "birch") return birch_all(m);
    if (f == "kloosterman") return kloosterman_all(cfg.kloosterman_a, m);
    if (f == "invk") return inverse_power_table(cfg.kloosterman_a, cfg.inverse_power_k, m);
    throw ConfigError("unknown family: " + f);
}

FunctionTable cached_family_table(const ExperimentConfig& cfg, const Modulus& m) {
    if (cfg.cache_dir.empty()) return build_family_table(cfg, m);
    fs::create_directories(cfg.cache_dir);
    const fs::path path = cfg.cache_dir / (family_key(cfg, m.value()) + ".ft");
    if (fs::exists(path)) {
        try {
            FunctionTable t = load_table(path);
            if (t.m() == m.value()) return t;
            std::cerr << "warning: cache header mismatch, recomputing: " << path << "\n";
        } catch (const CacheCorrupt& e) {
            std::cerr << "warning: corrupt cache entry, recomputing: " << e.what() << "\n";
        }
    }
    FunctionTable t = build_family_table(cfg, m);
    save_table(t, path);
    return t;
}

// ---- report plumbing ---------------------------------------------------

json report_shell(const ExperimentConfig& cfg) {
    const auto now = std::chrono::system_clock::now();
    return json{{"command", cfg.command},
                {"generated_at",
                 std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
                     .count()},
                {"config", cfg.echo()},
                {"results", json::array()}};
}

void write_report(const ExperimentConfig& cfg, json& report, bool passed) {
    report["passed"] = passed;
    fs::create_directories(cfg.out_dir);
    std::ofstream out(cfg.out_dir / (cfg.command + "_report.json"));
    out << report.dump(2) << "\n";
}

void write_csv(const ExperimentConfig& cfg, const std::string& name,
               const std::string& header, const std::vector<std::string>& rows) {
    fs::create_directories(cfg.out_dir);
    std::ofstream out(cfg.out_dir / name);
    out << header << "\n";
    for (const auto& r : rows) out << r << "\n";
}

std::vector<std::uint64_t> thm1_lengths(std::uint64_t m) {
    const double sqrt_m = std::sqrt(static_cast<double>(m));
    std::vector<std::uint64_t> lengths;
    const auto lo = static_cast<std::uint64_t>(std::floor(sqrt_m)) + 1;
    if (m <= 500) {
        for (std::uint64_t L = lo; L <= m; ++L) lengths.push_back(L);
        return lengths;
    }
    for (int i = 0; i < 50; ++i) {
        const double t = static_cast<double>(i) / 49.0;
        const auto L = static_cast<std::uint64_t>(
            std::round(std::pow(static_cast<double>(m) / static_cast<double>(lo), t) *
                       static_cast<double>(lo)));
        if (lengths.empty() || L != lengths.back()) lengths.push_back(std::min(L, m));
    }
    return lengths;
}

// ---- commands -----------------------------------------------------------

int cmd_dft_selftest(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t mval : cfg.moduli) {
        Modulus m(mval);
        std::vector<cplx> v(mval);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        for (auto& z : v) z = std::polar(1.0, angle(rng));
        FunctionTable phi(m, std::move(v));
        FunctionTable fast = dft_fast(phi);
        const double tol = 1e-9 * std::sqrt(static_cast<double>(mval)) * phi.sup_norm;
        double worst = 0.0;
        if (mval <= 2048) {
            FunctionTable naive = dft_naive(phi);
            for (std::uint64_t h = 0; h < mval; ++h)
                worst = std::max(worst, std::abs(fast.values[h] - naive.values[h]));
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, mval - 1);
            for (int i = 0; i < 128; ++i) {
                const std::uint64_t h = pick(rng);
                worst = std::max(worst, std::abs(fast.values[h] - dft_naive_entry(phi, h)));
            }
        }
        double e_phi = 0.0, e_hat = 0.0;
        for (const auto& z : phi.values) e_phi += std::norm(z);
        for (const auto& z : fast.values) e_hat += std::norm(z);
        const double parseval = std::abs(e_phi - e_hat) / e_phi;
        const bool ok = worst <= tol && parseval <= 1e-8;
        all_ok = all_ok && ok;
        report["results"].push_back(json{{"m", mval},
                                         {"max_abs_error", worst},
                                         {"tolerance", tol},
                                         {"parseval_rel_error", parseval},
                                         {"passed", ok}});
    }
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_thm1(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::vector<std::string> rows;
    for (std::uint64_t mval : cfg.moduli) {
        Modulus m(mval);
        SpectralPair pair = make_spectral_pair(cached_family_table(cfg, m));
        const auto lengths = cfg.lengths.empty() ? thm1_lengths(mval) : cfg.lengths;
        for (const BoundReport& r : check_thm1(pair, lengths)) {
            all_ok = all_ok && r.passed.value_or(false);
            report["results"].push_back(r.to_json());
            rows.push_back(std::to_string(mval) + "," +
                           std::to_string(static_cast<std::uint64_t>(r.witness.at("length"))) +
                           "," + std::to_string(r.lhs) + "," + std::to_string(r.rhs) + "," +
                           std::to_string(r.ratio));
        }
    }
    write_csv(cfg, "thm1_windows.csv", "m,length,lhs,rhs,ratio", rows);
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_transfer(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::vector<std::string> rows;
    for (std::uint64_t mval : cfg.moduli) {
        Modulus m(mval);
        SpectralPair pair = make_spectral_pair(cached_family_table(cfg, m));
        for (std::uint64_t N = 2; N <= mval / 2; N *= 2) {
            const BoundReport r = transfer_ratio(pair, N);
            all_ok = all_ok && r.passed.value_or(false);
            report["results"].push_back(r.to_json());
            rows.push_back(std::to_string(mval) + "," + std::to_string(N) + "," +
                           std::to_string(r.ratio));
        }
        const BoundReport d = delta_transfer_ratio(pair);
        all_ok = all_ok && d.passed.value_or(false);
        report["results"].push_back(d.to_json());
    }
    write_csv(cfg, "transfer_ratios.csv", "m,N,ratio", rows);
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_weyl(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    for (std::uint64_t mval : cfg.moduli) {
        Modulus m(mval);
        std::vector<std::uint64_t> hs = cfg.lengths;
        if (hs.empty())
            hs = {1,
                  static_cast<std::uint64_t>(
                      std::ceil(std::pow(static_cast<double>(mval), 2.0 / 3.0))),
                  mval};
        for (std::uint64_t H : hs)
            report["results"].push_back(weyl_bound_ratio(cfg.poly, m, H).to_json());
        if (m.is_squarefree()) {
            const BoundReport r = check_fourier_sup_squarefree(cfg.poly, m);
            all_ok = all_ok && r.passed.value_or(false);
            report["results"].push_back(r.to_json());
        }
    }
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_pv(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t mval : cfg.moduli) {
        Modulus m(mval);
        std::uniform_int_distribution<std::uint64_t> len(1, mval);
        std::uniform_int_distribution<std::uint64_t> start(0, mval - 1);
        for (int i = 0; i < std::max(1, cfg.random_placements); ++i) {
            const BoundReport r =
                check_pv_kernel(m, static_cast<std::int64_t>(start(rng)), len(rng));
            all_ok = all_ok && r.passed.value_or(false);
            report["results"].push_back(r.to_json());
        }
    }
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_equidist(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::vector<std::string> hist_rows;
    for (std::uint64_t pval : cfg.moduli) {
        Modulus p(pval);
        json entry{{"p", pval}};

        for (auto family : {AngleFamily::birch, AngleFamily::kloosterman}) {
            ExperimentConfig sub = cfg;
            sub.family = family == AngleFamily::birch ? "birch" : "kloosterman";
            const FunctionTable table = cached_family_table(sub, p);
            const AngleSample sample = extract_angles(table, family);
            const double ks = ks_distance(sample.angles, satotate_cdf);
            entry[sub.family + "_ks"] = ks;
            json weyl = json::object();
            for (unsigned d = 1; d <= 6; ++d)
                weyl["d" + std::to_string(d)] =
                    weyl_sum_satotate(sample, 0, sample.angles.size(), d);
            entry[sub.family + "_weyl"] = weyl;
            // Histogram of angles in 32 bins against the Sato-Tate mass.
            constexpr int kBins = 32;
            std::vector<std::uint64_t> bins(kBins, 0);
            for (double a : sample.angles)
                ++bins[std::min<int>(kBins - 1,
                                     static_cast<int>(a / std::numbers::pi * kBins))];
            for (int b = 0; b < kBins; ++b) {
                const double lo = std::numbers::pi * b / kBins;
                const double hi = std::numbers::pi * (b + 1) / kBins;
                hist_rows.push_back(sub.family + "," + std::to_string(pval) + "," +
                                    std::to_string(lo) + "," + std::to_string(hi) + "," +
                                    std::to_string(bins[b]) + "," +
                                    std::to_string(satotate_cdf(hi) - satotate_cdf(lo)));
            }
        }

        // Fractional parts of f = 1/X over the full range, against uniform.
        RationalFunctionModM inv{{1}, {0, 1}, 0};
        std::vector<double> fracs;
        fracs.reserve(pval - 1);
        for (std::uint64_t n = 1; n < pval; ++n) {
            const auto v = rational_eval(inv, n, p);
            fracs.push_back(static_cast<double>(v.value_or(0)) / static_cast<double>(pval));
        }
        entry["fractional_inv_ks"] = ks_distance(fracs, [](double x) { return x; });
        report["results"].push_back(entry);
    }
    // Trend: KS at the largest prime must be below the first.
    const auto& res = report["results"];
    if (res.size() >= 2) {
        for (const char* key : {"birch_ks", "kloosterman_ks", "fractional_inv_ks"}) {
            const double first = res.front()[key].get<double>();
            const double last = res.back()[key].get<double>();
            all_ok = all_ok && last < first;
        }
    }
    write_csv(cfg, "angle_histogram.csv", "family,p,bin_left,bin_right,count,satotate_mass",
              hist_rows);
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_birch(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t pval : cfg.moduli) {
        Modulus p(pval);
        ExperimentConfig sub = cfg;
        sub.family = "birch";
        const FunctionTable table = cached_family_table(sub, p);
        json entry{{"p", pval}};

        const BirchMoments full = birch_moments(table, 0, pval);
        entry["full_moment2_minus_p"] = full.moment2 - static_cast<double>(pval);
        all_ok = all_ok && std::abs(full.moment2 - static_cast<double>(pval)) < 1e-4;

        const auto len = static_cast<std::uint64_t>(
            std::ceil(std::pow(static_cast<double>(pval), 0.49)));
        std::uniform_int_distribution<std::uint64_t> start(0, pval - 1);
        json windows = json::array();
        for (int i = 0; i <= cfg.random_placements; ++i) {
            const std::int64_t a = i == 0 ? 1 : static_cast<std::int64_t>(start(rng));
            const BirchMoments mom = birch_moments(table, a, len);
            const TailCounts tails = birch_tail_counts(table, a, len, 0.25);
            windows.push_back(json{
                {"start", a},
                {"length", len},
                {"moment1_over_len", std::abs(mom.moment1) / static_cast<double>(len)},
                {"moment2_over_len", mom.moment2 / static_cast<double>(len)},
                {"tail_min_freq",
                 static_cast<double>(std::min(tails.above, tails.below)) /
                     static_cast<double>(len)},
            });
        }
        entry["windows"] = windows;
        const BoundReport psi = psi_hat_identity_check(p, table);
        all_ok = all_ok && psi.passed.value_or(false);
        entry["psi_hat_identity"] = psi.to_json();
        report["results"].push_back(entry);
    }
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

int cmd_mellin(const ExperimentConfig& cfg) {
    json report = report_shell(cfg);
    bool all_ok = true;
    std::mt19937_64 rng(cfg.seed);
    for (std::uint64_t pval : cfg.moduli) {
        Modulus p(pval);
        const DlogTable dlog = build_dlog(p, primitive_root(p));
        const FunctionTable tau = cached_family_table(cfg, p);
        const BoundReport sup = mellin_sup_check(tau, dlog, cfg.conductor);
        if (sup.passed) all_ok = all_ok && *sup.passed;
        report["results"].push_back(sup.to_json());

        std::uniform_int_distribution<std::uint64_t> xs(1, pval - 1);
        std::uniform_int_distribution<std::uint64_t> len(1, pval - 1);
        json sums = json::array();
        for (int i = 0; i < std::max(1, cfg.random_placements); ++i) {
            const std::uint64_t x = xs(rng);
            const std::uint64_t L = len(rng);
            const cplx s = geometric_progression_sum(tau, dlog, x, 1, L);
            sums.push_back(json{{"x", x}, {"length", L}, {"abs_sum", std::abs(s)}});
        }
        report["results"].push_back(json{{"p", pval}, {"progression_sums", sums}});
    }
    write_report(cfg, report, all_ok);
    return all_ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trace-function sums, transforms and inequality reports"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string config_path;
    std::uint64_t p_flag = 0, length_flag = 0, seed_flag = 0;
    std::string out_flag, cache_flag;
    bool seed_set = false;

    for (const char* name : {"dft-selftest", "thm1", "transfer", "weyl", "equidist",
                             "birch", "mellin", "pv"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--p", p_flag, "single modulus/prime (overrides config)");
        sub->add_option("--length", length_flag, "single length (overrides config)");
        sub->add_option("--seed", seed_flag, "RNG seed")->each([&](const std::string&) {
            seed_set = true;
        });
        sub->add_option("--out", out_flag, "output directory");
        sub->add_option("--cache", cache_flag, "table cache directory");
        sub->add_option("--family", cfg.family, "function family");
    }

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (p_flag) cfg.moduli = {p_flag};
        if (length_flag) cfg.lengths = {length_flag};
        if (seed_set) cfg.seed = seed_flag;
        if (!out_flag.empty()) cfg.out_dir = out_flag;
        if (!cache_flag.empty()) cfg.cache_dir = cache_flag;
        if (cfg.moduli.empty()) throw ConfigError("no modulus given (--p or config moduli)");
        for (std::uint64_t m : cfg.moduli)
            if (m < 2 || m > 20'000'000)
                throw ConfigError("modulus out of supported range [2, 2e7]");

        if (cfg.command == "dft-selftest") return cmd_dft_selftest(cfg);
        if (cfg.command == "thm1") return cmd_thm1(cfg);
        if (cfg.command == "transfer") return cmd_transfer(cfg);
        if (cfg.command == "weyl") return cmd_weyl(cfg);
        if (cfg.command == "equidist") return cmd_equidist(cfg);
        if (cfg.command == "birch") return cmd_birch(cfg);
        if (cfg.command == "mellin") return cmd_mellin(cfg);
        if (cfg.command == "pv") return cmd_pv(cfg);
        throw ConfigError("unknown command");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
