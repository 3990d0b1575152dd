#include <doctest.h>

#include <stdexcept>

#include "catstat/checks.hpp"

using namespace catstat;

TEST_CASE("theorem_main at n = 3 passes with the pinned witness") {
    const CheckReport r = run_check("theorem_main", {{"n", 3}});
    CHECK(r.pass);
    CHECK(r.params.at("n") == 3);
}

TEST_CASE("a few quick checks pass at reduced parameters") {
    CHECK(run_check("catalan_counts", {{"n", 5}}).pass);
    CHECK(run_check("transport_rs", {{"n", 5}}).pass);
    CHECK(run_check("transport_krat", {{"n", 5}}).pass);
    CHECK(run_check("transport_bjs", {{"n", 5}}).pass);
    CHECK(run_check("transport_kra", {{"n", 5}}).pass);
    CHECK(run_check("f321_matches_oracle", {{"order", 5}}).pass);
    CHECK(run_check("functional_eq", {{"order", 6}}).pass);
    CHECK(run_check("g_matches_oracle", {{"order", 4}, {"vmax", 5}}).pass);
    CHECK(run_check("dual_identity", {{"order", 4}, {"vmax", 5}}).pass);
    CHECK(run_check("trivial1_identity", {{"order", 4}, {"vmax", 6}}).pass);
    CHECK(run_check("involutions", {{"n", 6}}).pass);
    CHECK(run_check("weak_exc_shift", {{"n", 5}}).pass);
}

TEST_CASE("the small five-variable identities pass at reduced order") {
    CHECK(run_check("h_formulas", {{"order", 3}}).pass);
    CHECK(run_check("lemma_diag", {{"order", 3}}).pass);
}

TEST_CASE("negative control: corruptions are detected and located") {
    const CheckReport r = run_check("negative_control");
    CHECK(r.pass);
    CHECK(r.detail.find("x^1 t^2") != std::string::npos);
}

TEST_CASE("unknown ids and out-of-range parameters are rejected") {
    CHECK_THROWS_AS(run_check("no_such_check"), std::invalid_argument);
    CHECK_THROWS_AS(run_check("theorem_main", {{"n", 99}}), std::invalid_argument);
    CHECK_THROWS_AS(run_check("lemma_diag", {{"order", 8}}), std::invalid_argument);
}

TEST_CASE("catalog and defaults") {
    const auto& ids = check_catalog();
    CHECK(ids.size() == 19);
    CHECK(check_defaults("lemma_diag").at("vhi") == 14);
    CHECK(check_defaults("theorem_main").at("n") == 9);
}

TEST_CASE("reports serialize to JSON") {
    const CheckReport r = run_check("theorem_main", {{"n", 2}});
    const std::string j = to_json(r);
    CHECK(j.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(j.find("\"check_id\": \"theorem_main\"") != std::string::npos);
}
