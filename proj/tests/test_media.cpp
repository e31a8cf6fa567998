#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scatter/media.hpp"
#include "scatter/suites.hpp"

#include <nlohmann/json.hpp>

#include <random>

using namespace scatter;

TEST_CASE("profile to (tau, r): single jump") {
    ImpedanceProfile profile;
    profile.surface_impedance = 3;
    profile.jumps.push_back({Rational(1), Rational(-2)});

    const auto params = to_params(profile);
    REQUIRE(params.layer_count() == 1);
    CHECK(params.tau[0] == Rational(2));
    CHECK(params.r[0] == Rational(1, 2));
}

TEST_CASE("profile to (tau, r): two jumps") {
    ImpedanceProfile profile;
    profile.surface_impedance = 2;
    profile.jumps.push_back({Rational(1), Rational(-1, 2)});
    profile.jumps.push_back({Rational(3), Rational(-1, 2)});

    const auto params = to_params(profile);
    REQUIRE(params.layer_count() == 2);
    CHECK(params.tau[0] == Rational(2));
    CHECK(params.tau[1] == Rational(4));
    CHECK(params.r[0] == Rational(1, 7));
    CHECK(params.r[1] == Rational(1, 5));
}

TEST_CASE("degenerate profiles are rejected with a layer index") {
    ImpedanceProfile zero_jump;
    zero_jump.surface_impedance = 1;
    zero_jump.jumps.push_back({Rational(1), Rational(0)});
    CHECK_THROWS_WITH_AS(zero_jump.validate(), "zero impedance jump (layer 1)",
                         std::invalid_argument);

    ImpedanceProfile unsorted;
    unsorted.surface_impedance = 3;
    unsorted.jumps.push_back({Rational(2), Rational(-1)});
    unsorted.jumps.push_back({Rational(1), Rational(-1)});
    CHECK_THROWS_AS(unsorted.validate(), std::invalid_argument);

    ImpedanceProfile unnormalized;
    unnormalized.surface_impedance = 3;
    unnormalized.jumps.push_back({Rational(1), Rational(-1)});
    CHECK_THROWS_AS(unnormalized.validate(), std::invalid_argument);
}

TEST_CASE("params to profile reconstruction") {
    MediumParams params;
    params.tau = {Rational(2)};
    params.r = {Rational(1, 2)};
    const auto profile = from_params(params);
    CHECK(profile.surface_impedance == Rational(3));
    REQUIRE(profile.jumps.size() == 1);
    CHECK(profile.jumps[0].depth == Rational(1));
    CHECK(profile.layer_impedances() == std::vector<Rational>{Rational(3), Rational(1)});

    MediumParams two;
    two.tau = {Rational(2), Rational(4)};
    two.r = {Rational(1, 7), Rational(1, 5)};
    const auto impedances = from_params(two).layer_impedances();
    CHECK(impedances == std::vector<Rational>{Rational(2), Rational(3, 2), Rational(1)});
}

TEST_CASE("round trips are exact on random media") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 50; ++i) {
        const auto params = random_medium(rng, 1 + static_cast<int>(rng() % 6));
        const auto profile = from_params(params);
        const auto back = to_params(profile);
        CHECK(back.tau == params.tau);
        CHECK(back.r == params.r);
        for (const auto& zeta : profile.layer_impedances()) CHECK(zeta > 0);

        const auto profile_again = from_params(to_params(profile));
        CHECK(profile_again.surface_impedance == profile.surface_impedance);
        REQUIRE(profile_again.jumps.size() == profile.jumps.size());
        for (std::size_t j = 0; j < profile.jumps.size(); ++j) {
            CHECK(profile_again.jumps[j].depth == profile.jumps[j].depth);
            CHECK(profile_again.jumps[j].jump == profile.jumps[j].jump);
        }
    }
}

TEST_CASE("params validation") {
    MediumParams bad;
    bad.tau = {Rational(2)};
    bad.r = {Rational(0)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.r = {Rational(1)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    bad.r = {Rational(1, 2)};
    bad.tau = {Rational(0)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("JSON schemas") {
    const auto profile_json = nlohmann::json::parse(
        R"({"C0":"3","jumps":[{"x":"1","C":"-2"}]})");
    const auto params = medium_from_json(profile_json);
    CHECK(params.tau == std::vector<Rational>{Rational(2)});
    CHECK(params.r == std::vector<Rational>{Rational(1, 2)});

    const auto params_json = nlohmann::json::parse(R"({"tau":["2","4"],"r":["1/7","1/5"]})");
    const auto direct = medium_from_json(params_json);
    CHECK(direct.tau[1] == Rational(4));
    CHECK(direct.r[0] == Rational(1, 7));

    CHECK(to_json(direct).at("r")[1] == "1/5");
    CHECK_THROWS_AS(medium_from_json(nlohmann::json::object()), std::invalid_argument);
}

TEST_CASE("decimal ingestion rationalizes literally") {
    CHECK(rational_from_string("0.25") == Rational(1, 4));
    CHECK(rational_from_string("-1.5") == Rational(-3, 2));
    CHECK(rational_from_string("2") == Rational(2));
    CHECK(rational_from_string("  7/4 ") == Rational(7, 4));
    CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_string("1.2/3"), std::invalid_argument);
}
