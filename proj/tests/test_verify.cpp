#include "liar/error.hpp"
#include "liar/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace liar;

namespace {

const CheckResult* find(const VerifyReport& r, std::string_view prefix) {
    auto it = std::find_if(r.checks.begin(), r.checks.end(),
                           [&](const CheckResult& c) { return c.name.starts_with(prefix); });
    return it == r.checks.end() ? nullptr : &*it;
}

} // namespace

TEST_CASE("small suite passes") {
    VerifyOptions opts;
    opts.m_max = 3;
    const auto report = run_verification(opts);
    CHECK(report.all_pass());
    CHECK(report.checks.size() >= 12);
    for (const auto& c : report.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("full suite passes on both phase branches") {
    for (PhaseBranch branch : {PhaseBranch::Principal, PhaseBranch::Flipped}) {
        VerifyOptions opts;
        opts.branch = branch;
        const auto report = run_verification(opts);
        for (const auto& c : report.checks) {
            INFO(c.name << ": " << c.detail);
            CHECK(c.pass);
        }
        REQUIRE(find(report, "kappa pairing") != nullptr);
    }
}

TEST_CASE("corrupted kappa reference is caught") {
    VerifyOptions opts;
    opts.corrupt_kappa_reference = true;
    const auto report = run_verification(opts);
    CHECK_FALSE(report.all_pass());
    const CheckResult* pairing = find(report, "kappa pairing");
    REQUIRE(pairing != nullptr);
    CHECK_FALSE(pairing->pass);
    for (const auto& c : report.checks) {
        if (&c != pairing) {
            CHECK(c.pass);
        }
    }
}

TEST_CASE("range") {
    VerifyOptions opts;
    opts.m_max = 0;
    CHECK_THROWS_AS(run_verification(opts), Error);
    opts.m_max = 9;
    CHECK_THROWS_AS(run_verification(opts), Error);
}
