#include <doctest.h>

#include <string>

#include "deltaq/error.hpp"
#include "deltaq/verify.hpp"

using namespace deltaq;

TEST_CASE("verify: instance counts and pass flags at small bounds") {
    VerifyOptions o;
    o.max_n = 5;
    VerifyReport r = run_verify("theorem-4-2", o);
    CHECK(r.identity == "theorem-4-2");
    CHECK(r.instances_checked == 15);   // pairs 1 <= k <= n <= 5
    CHECK(r.failures.empty());
    CHECK(r.passed());
    CHECK(r.elapsed_seconds >= 0.0);
}

TEST_CASE("verify: unknown identity and bad bounds raise range errors") {
    VerifyOptions o;
    CHECK_THROWS_AS(run_verify("no-such-identity", o), RangeError);
    o.max_n = -3;
    CHECK_THROWS_AS(run_verify("theorem-4-2", o), RangeError);
}

TEST_CASE("verify: worker count does not change the result") {
    VerifyOptions serial;
    serial.max_n = 4;
    VerifyOptions parallel;
    parallel.max_n = 4;
    parallel.jobs = 4;
    for (const char* id : {"theorem-4-2", "lemma-2-3", "positivity"}) {
        VerifyReport a = run_verify(id, serial);
        VerifyReport b = run_verify(id, parallel);
        CHECK(a.instances_checked == b.instances_checked);
        CHECK(a.passed());
        CHECK(b.passed());
    }
}

TEST_CASE("verify: every identity passes at reduced bounds") {
    VerifyOptions o;
    o.max_n = 4;
    o.max_m = 2;
    o.max_j = 2;
    for (const std::string& id : verify_identity_names()) {
        VerifyReport r = run_verify(id, o);
        CAPTURE(id);
        CHECK(r.passed());
        CHECK(r.instances_checked > 0);
    }
}

TEST_CASE("verify: hypergeometric transformation sweep names the variant that holds") {
    VerifyOptions o;
    o.max_j = 2;
    VerifyReport r = run_verify("lemma-3-2", o);
    CHECK(r.passed());
    CHECK(r.notes.find("proof") != std::string::npos);
    CHECK(r.instances_checked > 0);
}

TEST_CASE("verify: report serializes with the documented fields") {
    VerifyOptions o;
    o.max_n = 3;
    VerifyReport r = run_verify("theorem-4-2", o);
    std::string j = to_json(r);
    CHECK(j.find("\"identity\":\"theorem-4-2\"") != std::string::npos);
    CHECK(j.find("\"passed\":true") != std::string::npos);
    CHECK(j.find("\"instances_checked\":6") != std::string::npos);
    CHECK(j.find("\"failures\":[]") != std::string::npos);
    CHECK(j.find("\"elapsed_seconds\":") != std::string::npos);
    CHECK(j.find("\"notes\":") != std::string::npos);

    std::string human = human_summary(r);
    CHECK(human.find("PASS") != std::string::npos);
    CHECK(human.find("theorem-4-2") != std::string::npos);
}
