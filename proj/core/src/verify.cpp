#include "deltaq/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "deltaq/delta.hpp"
#include "deltaq/error.hpp"
#include "deltaq/hypergeo.hpp"
#include "deltaq/osp.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/tableaux.hpp"

namespace deltaq {

namespace {

// One sweep instance: a reproducible key plus a runner that returns the
// empty string on success and a diff summary on failure.
struct Instance {
    std::string key;
    std::function<std::string()> run;
};

std::vector<std::string> run_all(const std::vector<Instance>& instances, int jobs) {
    std::vector<std::string> results(instances.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(instances.size() ? instances.size() : 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            try {
                results[i] = instances[i].run();
            } catch (const std::exception& e) {
                results[i] = std::string("exception: ") + e.what();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

std::string diff_symfunc(const SymFunc& lhs, const SymFunc& rhs) {
    if (lhs == rhs) return "";
    return "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
}

std::string diff_qlaurent(const QLaurent& lhs, const QLaurent& rhs) {
    if (lhs == rhs) return "";
    return "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
}

SymFunc c_or_zero(int n, int k) {
    if (n == 0) return k == 0 ? SymFunc::one() : SymFunc::zero(0);
    if (k < 1 || k > n) return SymFunc::zero(n);
    return c_via_qprime(n, k);
}

int defaulted(int value, int fallback, const char* name) {
    if (value == -1) return fallback;
    if (value < 0) throw RangeError(std::string("verify: invalid bound for ") + name);
    return value;
}

std::vector<Instance> instances_theorem_4_2(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 7, "max-n");
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            out.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                           [n, k]() {
                               return diff_symfunc(delta_prime_elem_t0(k, n), c_via_qprime(n, k));
                           }});
    return out;
}

std::vector<Instance> instances_osp_vs_qprime(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 7, "max-n");
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            out.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k),
                           [n, k]() -> std::string {
                               auto osp = c_via_osp(n, k, n);
                               auto ql = expand_in_vars(c_via_qprime(n, k), n);
                               if (osp == ql) return "";
                               return "monomial tables differ";
                           }});
    return out;
}

std::vector<Instance> instances_theorem_1_2(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 4, "max-m");
    int max_n = defaulted(o.max_n, 6, "max-n");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (const Partition& nu : enumerate_partitions(m))
            for (int n = 1; n <= max_n; ++n)
                out.push_back({"nu=" + nu.str() + " n=" + std::to_string(n),
                               [nu, n]() {
                                   return diff_symfunc(omega(delta_prime_schur_t0(nu, n)),
                                                       theorem12_rhs(nu, n));
                               }});
    return out;
}

std::vector<Instance> instances_lemma_4_1(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 7, "max-n");
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            out.push_back({"k=" + std::to_string(k) + " n=" + std::to_string(n),
                           [n, k]() {
                               return diff_symfunc(lemma41_rhs(k, n), delta_prime_elem_t0(k, n));
                           }});
    return out;
}

std::vector<Instance> instances_lemma_3_1(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 7, "max-n");
    std::vector<Instance> out;
    for (int n = 2; n <= max_n; ++n)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k <= n; ++k)
                out.push_back(
                    {"n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j),
                     [n, k, j]() {
                         SymFunc lhs = e_perp(j, c_or_zero(n, k));
                         SymFunc rhs(n - j);
                         for (int r = 0; r <= j; ++r) {
                             SymFunc c = c_or_zero(n - j, k - r);
                             if (c.is_zero()) continue;
                             QLaurent coeff = QLaurent::monomial(static_cast<int>(choose2(r))) *
                                              q_binomial(k, r) * q_binomial(k + j - r - 1, j - r);
                             rhs += c.scaled(coeff);
                         }
                         return diff_symfunc(lhs, rhs);
                     }});
    return out;
}

std::vector<Instance> instances_lemma_2_3(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 7, "max-n");
    std::vector<Instance> out;
    for (int n = 2; n <= max_n; ++n)
        for (int j = 1; j < n; ++j)
            for (int k = 1; k <= n; ++k)
                out.push_back(
                    {"n=" + std::to_string(n) + " k=" + std::to_string(k) + " j=" + std::to_string(j),
                     [n, k, j]() {
                         SymFunc lhs = e_perp(j, d_poly(n, k));
                         SymFunc rhs(n - j);
                         for (int m = std::max(1, k - j); m <= std::min(k, n - j); ++m) {
                             QLaurent coeff = QLaurent::monomial(
                                 static_cast<int>(static_cast<long>(k - m) * (n - j - m)));
                             rhs += d_poly(n - j, m).scaled(coeff * q_binomial(j, k - m));
                         }
                         rhs = rhs.scaled(QLaurent::monomial(static_cast<int>(choose2(j))) *
                                          q_binomial(k, j));
                         return diff_symfunc(lhs, rhs);
                     }});
    return out;
}

std::vector<Instance> instances_lemma_3_3(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 8, "max-n");
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            for (int j = 1; j <= k; ++j)
                for (int p = k - j; p <= n - j; ++p)
                    out.push_back({"j=" + std::to_string(j) + " k=" + std::to_string(k) +
                                       " n=" + std::to_string(n) + " p=" + std::to_string(p),
                                   [j, k, n, p]() -> std::string {
                                       return lemma33_check(j, k, n, p) ? "" : "sides differ";
                                   }});
    return out;
}

std::vector<Instance> instances_prop_5_1(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 3, "max-m");
    int max_n = defaulted(o.max_n, 5, "max-n");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n)
            out.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n),
                           [m, n]() -> std::string {
                               BiSymFunc lhs = prop51_lhs(m, n), rhs = prop51_rhs(m, n);
                               if (lhs == rhs) return "";
                               return "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
                           }});
    return out;
}

std::vector<Instance> instances_prop_5_2(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 3, "max-m");
    int max_n = defaulted(o.max_n, 5, "max-n");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (int n = 1; n <= max_n; ++n)
            out.push_back({"m=" + std::to_string(m) + " n=" + std::to_string(n),
                           [m, n]() -> std::string {
                               auto [lhs, rhs] = prop52_check(m, n);
                               if (lhs == rhs) return "";
                               return "lhs = " + lhs.str() + " ; rhs = " + rhs.str();
                           }});
    return out;
}

std::vector<Instance> instances_simple_2(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 5, "max-m");
    int max_j = defaulted(o.max_j, 6, "max-j");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (const Partition& nu : enumerate_partitions(m))
            for (int j = 0; j <= max_j; ++j)
                out.push_back({"nu=" + nu.str() + " j=" + std::to_string(j),
                               [nu, j]() {
                                   return diff_qlaurent(simple2_rhs(nu, j),
                                                        principal_spec_schur(nu, j, 0));
                               }});
    return out;
}

std::vector<Instance> instances_degree_claim(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 4, "max-m");
    int max_n = defaulted(o.max_n, 6, "max-n");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (const Partition& nu : enumerate_partitions(m))
            for (int n = 1; n <= max_n; ++n)
                out.push_back(
                    {"nu=" + nu.str() + " n=" + std::to_string(n), [nu, n]() -> std::string {
                         DeltaResult r = delta_prime_schur_result(nu, n);
                         if (r.value.is_zero()) return "";
                         if (r.value.min_q_exp() < 0)
                             return "negative q-exponent " + std::to_string(r.value.min_q_exp());
                         if (r.value.max_q_exp() != r.claimed_qdegree)
                             return "q-degree " + std::to_string(r.value.max_q_exp()) +
                                    " != claimed " + std::to_string(r.claimed_qdegree);
                         return "";
                     }});
    // The companion statement: deg_q C_{n,k} = (k-1)n - binom(k,2).
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k)
            out.push_back({"C n=" + std::to_string(n) + " k=" + std::to_string(k),
                           [n, k]() -> std::string {
                               SymFunc c = c_via_qprime(n, k);
                               int want = (k - 1) * n - static_cast<int>(choose2(k));
                               if (c.max_q_exp() != want)
                                   return "q-degree " + std::to_string(c.max_q_exp()) +
                                          " != claimed " + std::to_string(want);
                               return "";
                           }});
    return out;
}

std::vector<Instance> instances_positivity(const VerifyOptions& o) {
    int max_m = defaulted(o.max_m, 4, "max-m");
    int max_n = defaulted(o.max_n, 6, "max-n");
    std::vector<Instance> out;
    for (int m = 0; m <= max_m; ++m)
        for (const Partition& nu : enumerate_partitions(m))
            for (int n = 1; n <= max_n; ++n)
                out.push_back({"nu=" + nu.str() + " n=" + std::to_string(n),
                               [nu, n]() -> std::string {
                                   // The constructors already raise NegativityError on
                                   // violations; re-assert explicitly for clarity.
                                   if (!delta_prime_schur_t0(nu, n).is_nonneg_poly())
                                       return "primed value not in Z_(>=0)[q]";
                                   if (!delta_unprimed_schur_t0(nu, n).is_nonneg_poly())
                                       return "unprimed value not in Z_(>=0)[q]";
                                   return "";
                               }});
    return out;
}

std::vector<Instance> instances_shuffle_inner(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 6, "max-n");
    std::vector<Instance> out;
    for (int n = 1; n <= max_n; ++n) {
        // All compositions of n, lexicographic.
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        std::function<void(int)> gen = [&](int rest) {
            if (rest == 0) {
                comps.push_back(cur);
                return;
            }
            for (int a = 1; a <= rest; ++a) {
                cur.push_back(a);
                gen(rest - a);
                cur.pop_back();
            }
        };
        gen(n);
        for (int k = 1; k <= n; ++k)
            for (const auto& alpha : comps) {
                std::string akey;
                for (size_t i = 0; i < alpha.size(); ++i)
                    akey += (i ? "," : "") + std::to_string(alpha[i]);
                out.push_back({"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                   " alpha=(" + akey + ")",
                               [n, k, alpha]() {
                                   SymFunc e_alpha = SymFunc::one();
                                   for (int a : alpha) e_alpha = e_multiply(a, e_alpha);
                                   return diff_qlaurent(shuffle_inner(n, k, alpha),
                                                        hall_inner(c_via_qprime(n, k), e_alpha));
                               }});
            }
    }
    return out;
}

std::vector<Instance> instances_adjointness(const VerifyOptions& o) {
    int max_n = defaulted(o.max_n, 6, "max-n");
    std::vector<Instance> out;
    for (int d = 1; d <= max_n; ++d)
        for (int j = 1; j <= d; ++j)
            for (const Partition& lam : enumerate_partitions(d))
                for (const Partition& mu : enumerate_partitions(d - j))
                    out.push_back({"lam=" + lam.str() + " mu=" + mu.str() + " j=" + std::to_string(j),
                                   [lam, mu, j]() {
                                       return diff_qlaurent(
                                           hall_inner(e_perp(j, SymFunc::schur(lam)),
                                                      SymFunc::schur(mu)),
                                           hall_inner(SymFunc::schur(lam),
                                                      e_multiply(j, SymFunc::schur(mu))));
                                   }});
    return out;
}

VerifyReport run_lemma_3_2(const VerifyOptions& o) {
    int max_j = defaulted(o.max_j, 3, "max-j");
    constexpr int kLo = -3, kHi = 5;
    VerifyReport report;
    report.identity = "lemma-3-2";

    struct Tuple {
        int j, alpha, x, y, z;
    };
    std::vector<Tuple> tuples;
    for (int j = 0; j <= max_j; ++j)
        for (int alpha = kLo; alpha <= kHi; ++alpha)
            for (int x = kLo; x <= kHi; ++x)
                for (int y = kLo; y <= kHi; ++y)
                    for (int z = kLo; z <= kHi; ++z)
                        if (lemma32_preconditions(j, alpha, x, y, z).empty())
                            tuples.push_back({j, alpha, x, y, z});

    std::vector<Instance> instances;
    instances.reserve(tuples.size());
    for (const Tuple& t : tuples) {
        std::ostringstream key;
        key << "j=" << t.j << " alpha=" << t.alpha << " x=" << t.x << " y=" << t.y
            << " z=" << t.z;
        instances.push_back({key.str(), [t]() -> std::string {
                                 Lemma32Verdict v = lemma32_check(t.j, t.alpha, t.x, t.y, t.z);
                                 if (v.published_holds && v.proof_holds) return "both";
                                 if (v.published_holds) return "published";
                                 if (v.proof_holds) return "proof";
                                 return "neither";
                             }});
    }
    std::vector<std::string> results = run_all(instances, o.jobs);

    long published_fail = 0, proof_fail = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const std::string& r = results[i];
        if (r == "neither" || (r != "both" && r != "published" && r != "proof")) {
            report.failures.push_back({instances[i].key, "no printed variant holds: " + r});
            ++published_fail;
            ++proof_fail;
            continue;
        }
        if (r != "both" && r != "published") ++published_fail;
        if (r != "both" && r != "proof") ++proof_fail;
    }
    report.instances_checked = static_cast<long>(results.size());

    bool published_everywhere = published_fail == 0;
    bool proof_everywhere = proof_fail == 0;
    std::ostringstream notes;
    if (proof_everywhere && !published_everywhere) {
        notes << "the proof-step variant with (q^(-x-z-j+1); q)_j holds at every admissible "
                 "tuple; the published variant with (q^(-y-z-j+1); q)_j fails at "
              << published_fail << " tuples";
    } else if (published_everywhere && !proof_everywhere) {
        notes << "the published variant with (q^(-y-z-j+1); q)_j holds at every admissible "
                 "tuple; the proof-step variant fails at "
              << proof_fail << " tuples";
    } else if (published_everywhere && proof_everywhere) {
        notes << "both printed variants hold at every tuple; the sweep cannot discriminate";
        report.failures.push_back({"(sweep)", notes.str()});
    } else {
        notes << "neither printed variant holds uniformly (published fails at " << published_fail
              << ", proof-step fails at " << proof_fail << " tuples)";
        if (report.failures.empty())
            report.failures.push_back({"(sweep)", notes.str()});
    }
    report.notes = notes.str();
    return report;
}

} // namespace

std::vector<std::string> verify_identity_names() {
    return {"theorem-1-2", "theorem-4-2", "lemma-2-3",    "lemma-3-1",     "lemma-3-2",
            "lemma-3-3",   "lemma-4-1",   "prop-5-1",     "prop-5-2",      "simple-2",
            "degree-claim", "positivity", "osp-vs-qprime", "shuffle-inner", "adjointness"};
}

VerifyReport run_verify(const std::string& identity, const VerifyOptions& options) {
    auto start = std::chrono::steady_clock::now();

    VerifyReport report;
    if (identity == "lemma-3-2") {
        report = run_lemma_3_2(options);
    } else {
        std::vector<Instance> instances;
        if (identity == "theorem-4-2")
            instances = instances_theorem_4_2(options);
        else if (identity == "osp-vs-qprime")
            instances = instances_osp_vs_qprime(options);
        else if (identity == "theorem-1-2")
            instances = instances_theorem_1_2(options);
        else if (identity == "lemma-4-1")
            instances = instances_lemma_4_1(options);
        else if (identity == "lemma-3-1")
            instances = instances_lemma_3_1(options);
        else if (identity == "lemma-2-3")
            instances = instances_lemma_2_3(options);
        else if (identity == "lemma-3-3")
            instances = instances_lemma_3_3(options);
        else if (identity == "prop-5-1")
            instances = instances_prop_5_1(options);
        else if (identity == "prop-5-2")
            instances = instances_prop_5_2(options);
        else if (identity == "simple-2")
            instances = instances_simple_2(options);
        else if (identity == "degree-claim")
            instances = instances_degree_claim(options);
        else if (identity == "positivity")
            instances = instances_positivity(options);
        else if (identity == "shuffle-inner")
            instances = instances_shuffle_inner(options);
        else if (identity == "adjointness")
            instances = instances_adjointness(options);
        else
            throw RangeError("verify: unknown identity '" + identity + "'");

        report.identity = identity;
        std::vector<std::string> results = run_all(instances, options.jobs);
        report.instances_checked = static_cast<long>(results.size());
        for (size_t i = 0; i < results.size(); ++i)
            if (!results[i].empty())
                report.failures.push_back({instances[i].key, results[i]});
    }

    auto end = std::chrono::steady_clock::now();
    report.elapsed_seconds = std::chrono::duration<double>(end - start).count();
    return report;
}

std::string to_json(const VerifyReport& report, bool pretty) {
    nlohmann::ordered_json doc;
    doc["identity"] = report.identity;
    doc["passed"] = report.passed();
    doc["instances_checked"] = report.instances_checked;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const auto& f : report.failures) {
        nlohmann::ordered_json e;
        e["instance"] = f.instance;
        e["diff"] = f.diff;
        failures.push_back(std::move(e));
    }
    doc["failures"] = std::move(failures);
    doc["elapsed_seconds"] = report.elapsed_seconds;
    doc["notes"] = report.notes;
    return pretty ? doc.dump(2) : doc.dump();
}

std::string human_summary(const VerifyReport& report) {
    std::ostringstream os;
    os << (report.passed() ? "PASS" : "FAIL") << " " << report.identity << ": "
       << report.instances_checked << " instances";
    if (!report.failures.empty()) os << ", " << report.failures.size() << " failures";
    os.precision(3);
    os << " (" << std::fixed << report.elapsed_seconds << "s)";
    if (!report.notes.empty()) os << "\n  note: " << report.notes;
    if (!report.failures.empty()) {
        size_t show = std::min<size_t>(report.failures.size(), 5);
        for (size_t i = 0; i < show; ++i)
            os << "\n  failed [" << report.failures[i].instance << "] "
               << report.failures[i].diff;
        if (report.failures.size() > show)
            os << "\n  ... and " << (report.failures.size() - show) << " more";
    }
    return os.str();
}

} // namespace deltaq
