#include "crmoser/census.hpp"

#include <doctest.h>

using namespace crmoser;

namespace {

CensusConfig config(std::size_t n, std::size_t m, std::size_t samples, std::uint64_t seed) {
    CensusConfig c;
    c.n = n;
    c.m = m;
    c.samples = samples;
    c.seed = seed;
    return c;
}

}  // namespace

TEST_CASE("census surfaces depend only on seed and index") {
    CensusConfig c = config(3, 1, 0, 11);
    for (std::size_t i = 0; i < 10; ++i) {
        SampleMode m1, m2;
        Hypersurface a = census_surface(c, i, &m1);
        Hypersurface b = census_surface(c, i, &m2);
        CHECK(a.F() == b.F());
        CHECK(m1 == m2);
        CHECK(check_normal_form(a).passed());
        CHECK_FALSE(a.is_spherical());
    }
    CensusConfig other = c;
    other.seed = 12;
    bool differs = false;
    for (std::size_t i = 0; i < 10; ++i) differs = differs || !(census_surface(c, i).F() == census_surface(other, i).F());
    CHECK(differs);
}

TEST_CASE("census results do not depend on the thread count") {
    CensusConfig c = config(2, 1, 40, 7);
    Json one = census_to_json(run_census(c), true);
    c.threads = 4;
    Json four = census_to_json(run_census(c), true);
    CHECK(one == four);
    CHECK(one["results"].size() == 40);
    for (std::size_t i = 0; i < 40; ++i) CHECK(one["results"][i]["index"] == i);
}

TEST_CASE("census runs without gap violations") {
    for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 0}, {2, 1}, {3, 0}, {3, 1}}) {
        CAPTURE(n);
        CAPTURE(m);
        CensusResult r = run_census(config(n, m, 40, 3));
        CHECK(r.gap_violations == 0);
        std::size_t total = 0;
        for (const auto& [dim, count] : r.dim_histogram) total += count;
        CHECK(total == 40);
        for (const auto& s : r.samples) {
            CHECK(s.result.dim <= n * n);
            if (s.result.function_of_form) {
                CHECK(s.result.label == CaseLabel::Full);
                CHECK(s.result.dim == n * n);
            }
        }
    }
}

TEST_CASE("census configuration errors") {
    CensusConfig c = config(2, 0, 1, 0);
    c.max_weight = 6;
    CHECK_THROWS_AS(census_surface(c, 0), std::invalid_argument);
    c.max_weight = 8;
    c.pool.clear();
    CHECK_THROWS_AS(run_census(c), std::invalid_argument);
}

TEST_CASE("census report layout") {
    CensusResult r = run_census(config(2, 0, 5, 1));
    Json j = census_to_json(r);
    for (const char* key : {"n", "m", "samples", "seed", "max_weight", "pool", "gap_violations", "positive_controls",
                            "rejected_draws", "dim_histogram", "cases", "results"})
        CHECK(j.contains(key));
    CHECK_FALSE(j["results"][0].contains("F"));
    CHECK(census_to_json(r, true)["results"][0].contains("F"));
    CHECK(j["pool"][2] == "-1/2");
}
