#include <catch_amalgamated.hpp>

#include <cmath>

#include "acyclic/bounds.hpp"

using namespace acyclic;
using namespace acyclic::bounds;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

/// Minimum of 1/y + B y^2/(1-y^2) by a log-spaced scan of 1 - y followed by local refinement.
double grid_min_acyc1(double B) {
    auto f = [B](double y) { return 1.0 / y + B * y * y / (1.0 - y * y); };
    double best_s = 0.5;
    double best = f(0.5);
    for (int i = 0; i <= 20000; ++i) {
        const double s = std::pow(10.0, -12.0 + 12.0 * i / 20000.0);
        if (s >= 1.0) {
            continue;
        }
        const double v = f(1.0 - s);
        if (v < best) {
            best = v;
            best_s = s;
        }
    }
    for (int round = 0; round < 60; ++round) {
        const double step = best_s * std::pow(0.5, round / 3.0) * 0.01;
        for (double s : {best_s - step, best_s + step}) {
            if (s > 0.0 && s < 1.0 && f(1.0 - s) < best) {
                best = f(1.0 - s);
                best_s = s;
            }
        }
    }
    return best;
}

}  // namespace

TEST_CASE("forbidden-subgraph minimal c agrees with a grid search", "[bounds]") {
    for (double delta : {10.0, 100.0, 1e4, 1e6, 1e8, 1e12}) {
        const auto r = solve_forbidden_H(delta, 2);
        const double B = kst_constants(2).beta / std::sqrt(delta);
        INFO("Delta = " << delta);
        CHECK(r.feasible);
        CHECK_THAT(r.c, WithinAbs(grid_min_acyc1(B), 1e-7));
        CHECK_THAT(r.omega, WithinRel((2.0 + r.c) * r.y, 1e-15));
        CHECK(r.omega >= 1.0);
        CHECK(r.y > 0.0);
        CHECK(r.y < 1.0);
        CHECK(r.c >= acyc1_rhs(B, r.y) - 1e-9);
        CHECK(r.palette_size == static_cast<std::uint64_t>(std::ceil((2.0 + r.c) * delta - 1e-12)));
    }
}

TEST_CASE("forbidden-subgraph minimal c decreases towards 1", "[bounds]") {
    double prev = 1e300;
    for (double delta = 10.0; delta <= 1e16; delta *= 10.0) {
        const double c = solve_forbidden_H(delta, 2).c;
        CHECK(c <= prev);
        CHECK(c > 1.0);
        prev = c;
    }
    // With the explicit constants the minimum is about 1 + sqrt(2 beta / sqrt(Delta)).
    const double at_1e8 = solve_forbidden_H(1e8, 2).c;
    CHECK_THAT(at_1e8, WithinAbs(1.0 + std::sqrt(2.0 * kst_constants(2).beta * 1e-4), 2e-3));
    CHECK(solve_forbidden_H(1e12, 2).c < 1.01);
    CHECK(solve_forbidden_H(1e8, 3).c > solve_forbidden_H(1e8, 2).c);
    CHECK_THROWS_AS(solve_forbidden_H(1, 2), std::invalid_argument);
}

TEST_CASE("acyc1 minimiser without the second term", "[bounds]") {
    const auto [y, c] = minimize_acyc1(0.0);
    CHECK_THAT(c, WithinAbs(1.0, 1e-8));
    CHECK(y > 1.0 - 1e-7);
}

TEST_CASE("no-H right-hand side: closed form against series", "[bounds]") {
    const double beta = kst_constants(2).beta;
    const auto v = eval_lcl_rhs_no_H(81, 2, 2.0, 2.0);
    CHECK_THAT(v.closed_form, WithinAbs(1.0 + beta / 9.0 * (0.25 / 0.75) + 1.0, 1e-12));
    CHECK_THAT(v.series, WithinAbs(v.closed_form, 1e-9));
    CHECK_THAT(eval_lcl_rhs_no_H_truncated(81, 2, 2.0, 2.0, 200), WithinAbs(v.closed_form, 1e-9));
    CHECK_THAT(eval_lcl_rhs_no_H(100, 2, 1.0, 0.0).closed_form, WithinAbs(1.0, 1e-15));
    for (double y : {0.1, 0.5, 0.9, 0.99, 0.999}) {
        const double c = 1.5;
        const auto r = eval_lcl_rhs_no_H(1e4, 2, c, y * (2.0 + c));
        CHECK_THAT(r.series, WithinAbs(r.closed_form, 1e-9));
    }
    CHECK_THROWS_AS(eval_lcl_rhs_no_H(81, 2, 2.0, 4.0), std::domain_error);
}

TEST_CASE("short-cycle parameters", "[bounds]") {
    const auto r = short_cycle_params(1e4, 1.0, 12);
    REQUIRE(r.L);
    CHECK(*r.L == 67.0);
    CHECK(std::floor(10.0 * std::log(1e4) / (2.0 * std::log(2.0))) + 1.0 == 67.0);
    CHECK(r.feasible);
    CHECK(r.palette_size == 30000);
    CHECK_THAT(*r.a_coeff, WithinRel(1.0 / (2.0 * std::log(2.0)), 1e-15));
    for (double delta : {2.0, 3.0, 10.0, 1e6}) {
        CHECK(*short_cycle_params(delta, 0.5, 2).L == 1.0);
    }
    CHECK_THROWS_AS(short_cycle_params(100, 2.0, 5), std::domain_error);
    CHECK_THROWS_AS(short_cycle_params(100, 0.0, 5), std::domain_error);
}

TEST_CASE("feasible short-cycle parameters satisfy the summed inequality", "[bounds]") {
    for (double delta : {10.0, 100.0, 1e4}) {
        for (double eps : {0.25, 0.5, 1.0, 1.5}) {
            for (std::size_t r = 3; r <= 12; ++r) {
                const auto p = short_cycle_params(delta, eps, r);
                if (!p.feasible) {
                    continue;
                }
                // c >= 1/y + Delta^{-r+1} sum_{t=r+1}^{L} y^{2t-3}, term by term.
                const double y = 2.0 / eps;
                double sum = 0.0;
                for (std::size_t t = r + 1; t <= static_cast<std::size_t>(*p.L); ++t) {
                    sum += std::pow(delta, -static_cast<double>(r) + 1.0) * std::pow(y, 2.0 * t - 3.0);
                }
                INFO("Delta " << delta << " eps " << eps << " r " << r);
                CHECK(eps >= 1.0 / y + sum - 1e-9);
                CHECK_THAT(short_rhs(delta, r, static_cast<std::size_t>(*p.L), y), WithinRel(1.0 / y + sum, 1e-9));
            }
        }
    }
}

TEST_CASE("smallness condition", "[bounds]") {
    CHECK(check_epsilon_smallness(0.05));
    CHECK_FALSE(check_epsilon_smallness(0.1));
    CHECK(check_epsilon_smallness(1e-6));
    auto lhs = [](double e) { return 2 * e * e + std::pow(e, 5) / (1 - e * e) + 2 * e * e / (1 - e); };
    CHECK_THAT(lhs(0.1), WithinAbs(0.0422, 1e-4));
    CHECK_THAT(lhs(0.05), WithinAbs(0.0103, 1e-4));
    CHECK_THROWS_AS(check_epsilon_smallness(1.0), std::domain_error);
    CHECK_THROWS_AS(check_epsilon_smallness(0.0), std::domain_error);
}

TEST_CASE("recolor probability identity", "[bounds]") {
    CHECK_THAT(p_epsilon(0.05), WithinRel(0.05 / 20.025, 1e-15));
    CHECK_THAT(p_epsilon(0.05), WithinAbs(0.0024969, 1e-7));
    for (int i = 1; i <= 9; ++i) {
        const double e = i / 100.0;
        const double p = p_epsilon(e);
        const double lhs = p / (e * (1.0 - p));
        CHECK_THAT(lhs, WithinAbs(1.0 / (1.0 / e - e / 2.0), 1e-12));
        CHECK(lhs > e);
    }
    CHECK_THAT(1.0 / (1.0 / 0.05 - 0.025), WithinRel(1.0 / 19.975, 1e-15));
}

TEST_CASE("long-cycle parameters", "[bounds]") {
    const double e = 0.05;
    const auto r = long_cycle_params(1e3, e);
    const double p = p_epsilon(e);
    const double b = 1.0 / std::log(p / (e * e * (1.0 - p)));
    REQUIRE(r.L);
    CHECK(*r.L == std::ceil(b * (std::log(1e3) + std::log(4.0 / (e * e)))));
    CHECK_THAT(*r.b_coeff, WithinRel(b, 1e-15));
    CHECK_THAT(*r.d_coeff, WithinRel(b * std::log(4.0 / (e * e)), 1e-15));
    CHECK(r.feasible);
    CHECK(e / p >= subst_rhs(1e3, e, p, *r.L) * (1.0 - 1e-12));
    CHECK(r.y < p / (r.c * (1.0 - p)));
    CHECK(r.palette_size == 50);
    // With omega = y c / p the full recolor inequality holds as well.
    CHECK(r.omega >= long_rhs(1e3, r.c, p, r.omega, *r.L) * (1.0 - 1e-12));
    CHECK_THROWS_AS(long_cycle_params(1e3, 0.1), std::domain_error);
}

TEST_CASE("girth requirement", "[bounds]") {
    const auto g = girth_requirement(0.1, 1e6);
    const double ratio = g.b / (2.0 * g.a);
    CHECK(static_cast<double>(g.r) - 2.0 > ratio);
    CHECK_FALSE(static_cast<double>(g.r) - 3.0 > ratio);
    CHECK(g.girth == 2 * g.r + 1);
    CHECK(g.girth % 2 == 1);
    CHECK_THAT(g.a, WithinRel(short_coefficient(0.05), 1e-15));
    CHECK_THAT(g.b, WithinRel(long_coefficient(0.05), 1e-15));
    CHECK_FALSE(girth_requirement(0.1, 3).feasible);

    // The crossover lies far beyond double range: ln Delta of about 2.9e4.
    CHECK(g.crossover_log_delta > 709.0);
    CHECK_FALSE(girth_requirement(0.1, 1e300).feasible);
    CHECK_FALSE(girth_requirement_log(0.1, 0.99 * g.crossover_log_delta).feasible);
    CHECK(girth_requirement_log(0.1, 1.01 * g.crossover_log_delta).feasible);
    CHECK_THAT(girth_requirement_log(0.1, std::log(1e6)).L1, WithinRel(g.L1, 1e-15));

    // Once feasible, feasible for every larger Delta.
    for (double eps : {0.02, 0.05, 0.1}) {
        bool seen = false;
        const double x = girth_requirement_log(eps, 10.0).crossover_log_delta;
        for (double t = 0.5; t < 4.0; t += 0.125) {
            const bool f = girth_requirement_log(eps, t * x).feasible;
            if (seen) {
                CHECK(f);
            }
            seen = seen || f;
        }
        CHECK(seen);
    }
    CHECK_THROWS_AS(girth_requirement(0.2, 100), std::domain_error);
}
