#include <doctest.h>

#include "dualsig/selftest.hpp"
#include "toy_fixture.hpp"

using namespace dualsig;

namespace {
bool all_ok(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.ok) return false;
    return true;
}

const CheckResult* find(const std::vector<CheckResult>& results, const std::string& name) {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}
}  // namespace

TEST_CASE("shipped vectors pass") {
    auto results = run_selftest();
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.ok);
    }
    CHECK(all_ok(results));
}

TEST_CASE("a wrong base-point coordinate is caught by the order check") {
    KatVectors v = builtin_kat();
    v.P.y += 1;
    auto results = run_kat_checks(v);
    const CheckResult* on_curve = find(results, "P on curve");
    REQUIRE(on_curve);
    CHECK_FALSE(on_curve->ok);
}

TEST_CASE("a wrong derived point is named") {
    KatVectors v = builtin_kat();
    std::swap(v.Q, v.R);
    auto results = run_kat_checks(v);
    const CheckResult* q_check = find(results, "Q = g^a P");
    const CheckResult* r_check = find(results, "R = g^(a-ab) P");
    REQUIRE(q_check);
    REQUIRE(r_check);
    CHECK_FALSE(q_check->ok);
    CHECK_FALSE(r_check->ok);
}

TEST_CASE("a perturbed exponentiation vector is named") {
    KatVectors v = builtin_kat();
    v.r += 1;
    auto results = run_kat_checks(v);
    const CheckResult* r_check = find(results, "r = g^b mod n");
    REQUIRE(r_check);
    CHECK_FALSE(r_check->ok);
}

TEST_CASE("the pairing table detects a corrupted final exponent") {
    PairingContext good = toy::pairing_ctx();
    CHECK(toy_pairing_table_ok(good, toy::base_point()));
    PairingContext bad = good;
    bad.final_exp += 2;
    CHECK_FALSE(toy_pairing_table_ok(bad, toy::base_point()));
}
