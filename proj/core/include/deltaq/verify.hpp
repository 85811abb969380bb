#ifndef DELTAQ_VERIFY_HPP
#define DELTAQ_VERIFY_HPP

#include <string>
#include <vector>

namespace deltaq {

struct VerifyFailure {
    std::string instance;   // reproducible parameter set, e.g. "n=5 k=3"
    std::string diff;       // what disagreed
};

struct VerifyReport {
    std::string identity;
    long instances_checked = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_seconds = 0.0;
    std::string notes;      // e.g. which printed variant of a lemma held

    bool passed() const { return failures.empty(); }
};

// Bounds for the instance sweeps; -1 means the identity's default (the
// acceptance-criteria bound).  jobs caps the worker thread count.
struct VerifyOptions {
    int max_n = -1;
    int max_m = -1;
    int max_j = -1;
    int jobs = 1;
};

// Identity ids accepted by run_verify, in canonical order.
std::vector<std::string> verify_identity_names();

// Runs the full instance sweep for one identity.  RangeError for an unknown
// identity or nonsensical bounds.
VerifyReport run_verify(const std::string& identity, const VerifyOptions& options);

std::string to_json(const VerifyReport& report, bool pretty = false);
std::string human_summary(const VerifyReport& report);

} // namespace deltaq

#endif
