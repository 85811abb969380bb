#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "deltaq/compute.hpp"
#include "deltaq/error.hpp"
#include "deltaq/kf_cache.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/verify.hpp"

namespace {

std::string error_json(const std::string& message) {
    nlohmann::ordered_json doc;
    doc["error"] = message;
    return doc.dump();
}

// Comma-separated weakly decreasing positive parts; "" is the empty
// partition.
deltaq::Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw deltaq::ParseError("invalid partition part '" + token + "'");
        }
        if (used != token.size())
            throw deltaq::ParseError("invalid partition part '" + token + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == text.size()) throw deltaq::ParseError("trailing comma in partition");
    }
    return deltaq::Partition(parts);
}

std::optional<deltaq::Partition> parse_optional_partition(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return parse_partition(*text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deltaq: exact symbolic computation for delta operators at t = 0"};
    app.require_subcommand(1);

    // --- compute ---
    auto* compute = app.add_subcommand("compute", "Compute one object and print its JSON");
    std::string target;
    compute->add_option("target", target, "One of: " + [] {
                            std::string s;
                            for (const auto& t : deltaq::compute_target_names())
                                s += (s.empty() ? "" : ", ") + t;
                            return s;
                        }())
        ->required();
    std::optional<int> n, k, m, j, p, alpha, x, y, z;
    std::optional<std::string> lam_s, mu_s, nu_s;
    compute->add_option("--n", n, "Main size parameter");
    compute->add_option("--k", k, "Block / column parameter");
    compute->add_option("--m", m, "Secondary size parameter");
    compute->add_option("--j", j, "Strip / order parameter");
    compute->add_option("--p", p, "Shift parameter");
    compute->add_option("--alpha", alpha, "Exponent parameter");
    compute->add_option("--x", x, "Exponent parameter");
    compute->add_option("--y", y, "Exponent parameter");
    compute->add_option("--z", z, "Exponent parameter");
    compute->add_option("--lam", lam_s, "Partition, comma-separated descending parts");
    compute->add_option("--mu", mu_s, "Partition, comma-separated descending parts");
    compute->add_option("--nu", nu_s, "Partition, comma-separated descending parts");
    bool flag_json = false, flag_pretty = false;
    auto* opt_json = compute->add_flag("--json", flag_json, "Compact JSON output (default)");
    compute->add_flag("--pretty", flag_pretty, "Indented JSON output")->excludes(opt_json);

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "Sweep one identity and report");
    std::string identity;
    verify->add_option("identity", identity, "One of: " + [] {
                           std::string s;
                           for (const auto& i : deltaq::verify_identity_names())
                               s += (s.empty() ? "" : ", ") + i;
                           return s;
                       }())
        ->required();
    deltaq::VerifyOptions vopts;
    verify->add_option("--max-n", vopts.max_n, "Bound on n (-1 = identity default)");
    verify->add_option("--max-m", vopts.max_m, "Bound on m / |nu| (-1 = identity default)");
    verify->add_option("--max-j", vopts.max_j, "Bound on j (-1 = identity default)");
    verify->add_option("--jobs", vopts.jobs, "Worker thread count")->check(CLI::PositiveNumber);
    std::optional<std::string> cache_flag;
    verify->add_option("--cache", cache_flag, "Kostka-Foulkes cache file (JSON lines)");
    bool paranoid = false;
    verify->add_flag("--paranoid", paranoid, "Recompute and validate cached entries on load");
    bool vflag_json = false, vflag_pretty = false;
    auto* vopt_json = verify->add_flag("--json", vflag_json, "Compact JSON report (default)");
    verify->add_flag("--pretty", vflag_pretty, "Indented JSON report")->excludes(vopt_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help
        std::cout << error_json(e.what()) << "\n";
        return 2;
    }

    try {
        if (compute->parsed()) {
            deltaq::ComputeParams params;
            params.n = n;
            params.k = k;
            params.m = m;
            params.j = j;
            params.p = p;
            params.alpha = alpha;
            params.x = x;
            params.y = y;
            params.z = z;
            params.lam = parse_optional_partition(lam_s);
            params.mu = parse_optional_partition(mu_s);
            params.nu = parse_optional_partition(nu_s);
            std::cout << deltaq::compute_command(target, params, flag_pretty) << "\n";
            return 0;
        }

        // verify
        std::optional<std::string> cache_path = cache_flag;
        if (!cache_path) {
            if (const char* env = std::getenv("DELTAQ_CACHE"); env && *env)
                cache_path = std::string(env);
        }
        if (cache_path) {
            deltaq::KFCacheLoadStats stats = deltaq::kf_cache_load(*cache_path, paranoid);
            if (stats.rejected > 0)
                std::cerr << "cache: rejected " << stats.rejected << " entries from "
                          << *cache_path << "\n";
        }
        deltaq::VerifyReport report = deltaq::run_verify(identity, vopts);
        if (cache_path) deltaq::kf_cache_store(*cache_path);
        std::cout << deltaq::to_json(report, vflag_pretty) << "\n";
        std::cerr << deltaq::human_summary(report) << "\n";
        return report.passed() ? 0 : 1;
    } catch (const deltaq::Error& e) {
        std::cout << error_json(e.what()) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << error_json(e.what()) << "\n";
        return 2;
    }
}
