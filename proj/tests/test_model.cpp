#include "bjlab/errors.hpp"
#include "bjlab/model.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace bjlab;

TEST_SUITE("model") {

TEST_CASE("make_params derives the state count") {
    CHECK(make_params(12, 0.10, 0.25, 0.0).n() == 26);
    CHECK(make_params(0, 0.10, 0.25, 0.0).n() == 2);
    CHECK(make_params(1, 0.10, 0.25, 0.0).n() == 4);
    CHECK(make_params(12, 0.10, 0.25, 0.0).dark_count() == 25);
}

TEST_CASE("make_params rejects bad input with distinct kinds") {
    using Kind = ValidationError::Kind;
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const ValidationError& e) {
            return e.kind();
        }
        FAIL("no ValidationError thrown");
        return Kind::BadArgument;
    };
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(kind_of([&] { make_params(12, nan, 0.25, 0.0); }) == Kind::NonFinite);
    CHECK(kind_of([&] { make_params(12, 0.1, inf, 0.0); }) == Kind::NonFinite);
    CHECK(kind_of([&] { make_params(12, 0.1, 0.25, nan); }) == Kind::NonFinite);
    CHECK(kind_of([&] { make_params(12, 0.1, 0.0, 0.0); }) == Kind::NonPositiveSpacing);
    CHECK(kind_of([&] { make_params(12, 0.1, -0.25, 0.0); }) == Kind::NonPositiveSpacing);
    CHECK(kind_of([&] { make_params(12, -0.1, 0.25, 0.0); }) == Kind::NegativeCoupling);
    CHECK(kind_of([&] { make_params(-1, 0.1, 0.25, 0.0); }) == Kind::NegativeHalfWidth);
    CHECK_NOTHROW(make_params(12, 0.0, 0.25, 0.0));
}

TEST_CASE("state indexing follows the canonical order") {
    const auto p = make_params(12, 0.1, 0.25);
    CHECK(StateIndex::bright().position(p) == 0);
    CHECK(StateIndex::dark(-12).position(p) == 1);
    CHECK(StateIndex::dark(0).position(p) == 13);
    CHECK(StateIndex::dark(12).position(p) == 25);
    CHECK_THROWS_AS(StateIndex::dark(13).position(p), ValidationError);
    CHECK_FALSE(StateIndex::dark(-13).valid_for(p));
    CHECK_FALSE(StateIndex::bright() == StateIndex::dark(0));
    for (std::size_t i = 0; i < p.n(); ++i) CHECK(state_at(p, i).position(p) == i);
}

TEST_CASE("level_frequency") {
    const auto p = make_params(12, 0.1, 0.25, 0.0);
    CHECK(level_frequency(p, StateIndex::dark(1)) == 0.25);
    CHECK(level_frequency(p, StateIndex::bright()) == 0.0);
    CHECK(level_frequency(p, StateIndex::dark(-12)) == -3.0);
    CHECK_THROWS_AS(level_frequency(p, StateIndex::dark(20)), ValidationError);
}

TEST_CASE("dark levels are spaced by epsilon") {
    // Exact for a binary-representable spacing; to rounding otherwise.
    for (double eps : {0.25, 0.5, 0.125}) {
        const auto p = make_params(12, 0.1, eps, 0.0);
        for (int k = -11; k <= 12; ++k) {
            CHECK(level_frequency(p, StateIndex::dark(k)) - level_frequency(p, StateIndex::dark(k - 1)) == eps);
        }
    }
    const auto p = make_params(12, 0.1, 0.1, 0.3);
    for (int k = -11; k <= 12; ++k) {
        const double gap = level_frequency(p, StateIndex::dark(k)) - level_frequency(p, StateIndex::dark(k - 1));
        CHECK(gap == doctest::Approx(0.1).epsilon(1e-14));
    }
}

TEST_CASE("build_hamiltonian") {
    SUBCASE("two-level ladder is degenerate with s") {
        const auto h = build_hamiltonian(make_params(0, 0.1, 0.25));
        CHECK(h.diag == std::vector<double>{0.0, 0.0});
        CHECK(h.coupling == 0.1);
    }
    SUBCASE("m = 1") {
        const auto h = build_hamiltonian(make_params(1, 0.04, 0.25));
        CHECK(h.diag == std::vector<double>{0.0, -0.25, 0.0, 0.25});
        CHECK(h.coupling == 0.04);
    }
    SUBCASE("m = 12, epsilon = 0.25 spans [-3, 3]") {
        const auto h = build_hamiltonian(make_params(12, 0.10, 0.25));
        REQUIRE(h.size() == 26);
        CHECK(h.diag[1] == -3.0);
        CHECK(h.diag[25] == 3.0);
    }
    SUBCASE("dense form is symmetric with couplings only on the border") {
        const auto h = build_hamiltonian(make_params(3, 0.07, 0.2, 0.1));
        const auto d = h.dense();
        const std::size_t n = h.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(d[i * n + j] == d[j * n + i]);
                if (i != j && i != 0 && j != 0) CHECK(d[i * n + j] == 0.0);
            }
        }
    }
    SUBCASE("deterministic") {
        const auto p = make_params(5, 0.03, 0.11, -0.2);
        CHECK(build_hamiltonian(p).diag == build_hamiltonian(p).diag);
    }
}

TEST_CASE("golden_rule_gamma reproduces the tabulated rates") {
    auto g = [](double v, double e) { return golden_rule_gamma(make_params(12, v, e)); };
    // Three significant figures.
    auto sig3 = [](double x) {
        const double scale = std::pow(10.0, 2 - std::floor(std::log10(std::abs(x))));
        return std::round(x * scale) / scale;
    };
    CHECK(sig3(g(0.10, 0.25)) == doctest::Approx(0.251));
    CHECK(sig3(g(0.04, 0.25)) == doctest::Approx(0.0402));
    CHECK(g(0.04, 0.25) == doctest::Approx(0.040).epsilon(0.01));
    CHECK(sig3(g(0.075, 0.10)) == doctest::Approx(0.353));
    CHECK(sig3(g(0.05, 0.10)) == doctest::Approx(0.157));
    CHECK(sig3(g(0.02, 0.10)) == doctest::Approx(0.0251));
    CHECK(sig3(g(0.01, 0.10)) == doctest::Approx(0.00628));
    CHECK(sig3(g(0.002, 0.10)) == doctest::Approx(0.000251));
    CHECK(g(0.0, 0.10) == 0.0);
}

TEST_CASE("golden_rule_gamma is quadratic in vbar") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> v(0.0, 0.2), e(0.01, 1.0), c(0.1, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double vb = v(rng), eps = e(rng), scale = c(rng);
        const double base = golden_rule_gamma(make_params(12, vb, eps));
        const double scaled = golden_rule_gamma(make_params(12, scale * vb, eps));
        CHECK(scaled == doctest::Approx(scale * scale * base).epsilon(1e-14));
    }
}

}
