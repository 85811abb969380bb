#include "deltaq/compute.hpp"

#include "deltaq/delta.hpp"
#include "deltaq/error.hpp"
#include "deltaq/json_io.hpp"
#include "deltaq/osp.hpp"
#include "deltaq/qarith.hpp"
#include "deltaq/symfunc.hpp"
#include "deltaq/tableaux.hpp"

namespace deltaq {

namespace {

int need_int(const std::optional<int>& v, const char* flag) {
    if (!v) throw RangeError(std::string("compute: missing required option --") + flag);
    return *v;
}

Partition need_partition(const std::optional<Partition>& v, const char* flag) {
    if (!v) throw RangeError(std::string("compute: missing required option --") + flag);
    return *v;
}

// nu defaults to the empty partition when omitted.
Partition nu_or_empty(const std::optional<Partition>& v) { return v ? *v : Partition(); }

} // namespace

std::vector<std::string> compute_target_names() {
    return {"qbinomial",        "kostka-foulkes",    "qprime",      "c",
            "d",                "delta-prime-elem",  "delta-prime-schur",
            "delta-schur",      "p-coeff",           "grfrob-v",    "grfrob-rnnu"};
}

std::string compute_command(const std::string& target, const ComputeParams& params,
                            bool pretty) {
    if (target == "qbinomial")
        return to_json(q_binomial(need_int(params.n, "n"), need_int(params.k, "k")), pretty);
    if (target == "kostka-foulkes")
        return to_json(kostka_foulkes(need_partition(params.lam, "lam"),
                                      need_partition(params.mu, "mu")),
                       pretty);
    if (target == "qprime")
        return to_json(qprime(need_partition(params.mu, "mu")), pretty);
    if (target == "c")
        return to_json(c_via_qprime(need_int(params.n, "n"), need_int(params.k, "k")), pretty);
    if (target == "d")
        return to_json(d_poly(need_int(params.n, "n"), need_int(params.k, "k")), pretty);
    if (target == "delta-prime-elem")
        return to_json(delta_prime_elem_t0(need_int(params.k, "k"), need_int(params.n, "n")),
                       pretty);
    if (target == "delta-prime-schur")
        return to_json(delta_prime_schur_t0(nu_or_empty(params.nu), need_int(params.n, "n")),
                       pretty);
    if (target == "delta-schur")
        return to_json(delta_unprimed_schur_t0(nu_or_empty(params.nu), need_int(params.n, "n")),
                       pretty);
    if (target == "p-coeff")
        return to_json(p_coeff(nu_or_empty(params.nu), need_int(params.k, "k")), pretty);
    if (target == "grfrob-v")
        return to_json(grfrob_V(need_int(params.n, "n"), need_int(params.m, "m")), pretty);
    if (target == "grfrob-rnnu")
        return to_json(grfrob_R_nnu(nu_or_empty(params.nu), need_int(params.n, "n")), pretty);
    throw RangeError("compute: unknown target '" + target + "'");
}

} // namespace deltaq
