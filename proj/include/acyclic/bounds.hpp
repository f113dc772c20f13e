#ifndef ACYCLIC_BOUNDS_HPP
#define ACYCLIC_BOUNDS_HPP

// Feasibility solvers for the local-cut-lemma inequalities behind the
// coloring bounds. All logarithms are natural; another base rescales the
// a/b/d coefficients together and leaves every verified inequality unchanged.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "acyclic/extremal.hpp"

namespace acyclic::bounds {

struct BoundResult {
    bool feasible = false;
    double c = 0;      // free-color multiplier
    double y = 0;      // substitution variable (omega/(2+c) or p*omega/c)
    double omega = 0;  // constant LCL weight
    std::optional<double> L;
    std::optional<double> p;
    std::uint64_t palette_size = 0;
    // Coefficients of the L formulas, when the query has them.
    std::optional<double> a_coeff;
    std::optional<double> b_coeff;
    std::optional<double> d_coeff;
};

inline std::uint64_t ceil_palette(double multiplier, double delta) {
    return static_cast<std::uint64_t>(std::ceil(multiplier * delta - 1e-12));
}

// ---------------------------------------------------------------------------
// Forbidden K_{k,k}: c >= 1/y + B y^2/(1-y^2) with B = beta Delta^{-delta}.

inline double acyc1_rhs(double coefficient, double y) {
    return 1.0 / y + coefficient * y * y / (1.0 - y * y);
}

inline double forbidden_H_coefficient(double delta_max, int k) {
    const auto kc = kst_constants(k);
    return kc.beta * std::pow(delta_max, -kc.delta);
}

/**
 * Minimizes 1/y + B y^2/(1-y^2) over y in (0,1) by golden-section search
 * (the objective is convex there). Returns {y, value}.
 */
inline std::pair<double, double> minimize_acyc1(double coefficient, double tolerance = 1e-9) {
    constexpr double inv_phi = 0.6180339887498949;
    double lo = 1e-12;
    double hi = 1.0 - 1e-15;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = acyc1_rhs(coefficient, x1);
    double f2 = acyc1_rhs(coefficient, x2);
    while (hi - lo > tolerance) {
        // Ties move toward the smaller y.
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = acyc1_rhs(coefficient, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = acyc1_rhs(coefficient, x2);
        }
    }
    const double y = f1 <= f2 ? x1 : x2;
    return {y, acyc1_rhs(coefficient, y)};
}

/// Smallest c (and its y) for which the forbidden-K_{k,k} inequality is satisfiable.
inline BoundResult solve_forbidden_H(double delta_max, int k) {
    if (delta_max < 2 || k < 2) {
        throw std::invalid_argument("solve_forbidden_H requires Delta >= 2 and k >= 2");
    }
    const double coefficient = forbidden_H_coefficient(delta_max, k);
    const auto [y, c] = minimize_acyc1(coefficient);
    BoundResult r;
    r.c = c;
    r.y = y;
    r.omega = (2.0 + c) * y;
    r.palette_size = ceil_palette(2.0 + c, delta_max);
    r.feasible = r.omega >= 1.0 && y > 0.0 && y < 1.0 && c >= acyc1_rhs(coefficient, y);
    return r;
}

struct LclRhs {
    double closed_form;
    double series;
    std::size_t terms;
};

/**
 * Right side of omega >= 1 + sum_t beta Delta^{2t-2-delta} (omega/((2+c)Delta))^{2t-2} + 2 omega/(2+c),
 * evaluated in closed form and by direct summation until the terms vanish.
 */
inline LclRhs eval_lcl_rhs_no_H(double delta_max, int k, double c, double omega,
                                std::size_t max_terms = 100'000'000) {
    const double y = omega / (2.0 + c);
    if (!(y < 1.0) || y < 0.0) {
        throw std::domain_error("omega/(2+c) must lie in [0,1) for the series to converge");
    }
    const auto kc = kst_constants(k);
    const double coefficient = kc.beta * std::pow(delta_max, -kc.delta);
    const double closed = 1.0 + coefficient * y * y / (1.0 - y * y) + 2.0 * y;

    double sum = 0.0;
    double term = y * y;
    std::size_t t = 0;
    while (t < max_terms && term > 0.0 && term > 1e-18 * sum) {
        sum += term;
        term *= y * y;
        ++t;
    }
    return {closed, 1.0 + coefficient * sum + 2.0 * y, t};
}

/// The same right side with the series truncated after `terms` terms (t = 2 .. terms+1).
inline double eval_lcl_rhs_no_H_truncated(double delta_max, int k, double c, double omega, std::size_t terms) {
    const double y = omega / (2.0 + c);
    const auto kc = kst_constants(k);
    double sum = 0.0;
    for (std::size_t t = 2; t < terms + 2; ++t) {
        // beta Delta^{2t-2-delta} omega^{2t-2} / ((2+c) Delta)^{2t-2}
        sum += kc.beta * std::pow(delta_max, -kc.delta) * std::pow(y, 2.0 * static_cast<double>(t) - 2.0);
    }
    return 1.0 + sum + 2.0 * y;
}

// ---------------------------------------------------------------------------
// Short cycles under girth > 2r.

/// a_eps = (2 ln(2/eps))^{-1}.
inline double short_coefficient(double eps) { return 1.0 / (2.0 * std::log(2.0 / eps)); }

/// 1/y + Delta^{-r+1} sum_{t=r+1}^{L} y^{2t-3}, summed term by term in log space.
inline double short_rhs(double delta_max, std::size_t r, std::size_t L, double y) {
    double sum = 0.0;
    const double log_scale = -(static_cast<double>(r) - 1.0) * std::log(delta_max);
    for (std::size_t t = r + 1; t <= L; ++t) {
        sum += std::exp(log_scale + (2.0 * static_cast<double>(t) - 3.0) * std::log(y));
    }
    return 1.0 / y + sum;
}

inline BoundResult short_cycle_params(double delta_max, double eps, std::size_t r) {
    if (!(eps > 0.0) || eps >= 2.0) {
        throw std::domain_error("short_cycle_params requires 0 < eps < 2");
    }
    if (r < 2 || delta_max < 2) {
        throw std::invalid_argument("short_cycle_params requires r >= 2 and Delta >= 2");
    }
    BoundResult res;
    res.c = eps;
    res.y = 2.0 / eps;
    res.omega = (2.0 + res.c) * res.y;
    res.a_coeff = short_coefficient(eps);
    // Written as a single quotient so exact cases (e.g. eps = 1, Delta = 2^j) floor correctly.
    const double raw = (static_cast<double>(r) - 2.0) * std::log(delta_max) / (2.0 * std::log(2.0 / eps));
    const double L = std::floor(raw) + 1.0;
    res.L = L;
    res.palette_size = ceil_palette(2.0 + eps, delta_max);
    // eps/2 >= Delta^{-r+2} (2/eps)^{2L-3}, compared in log space.
    const double lhs = std::log(eps / 2.0);
    const double rhs = -(static_cast<double>(r) - 2.0) * std::log(delta_max) + (2.0 * L - 3.0) * std::log(2.0 / eps);
    res.feasible = L <= delta_max && lhs >= rhs - 1e-12;
    return res;
}

// ---------------------------------------------------------------------------
// Long cycles: sparse recoloring with c*Delta fresh colors.

/// 2 eps^2 + eps^5/(1-eps^2) + 2 eps^2/(1-eps) <= eps/4.
inline bool check_epsilon_smallness(double eps) {
    if (!(eps > 0.0) || eps >= 1.0) {
        throw std::domain_error("check_epsilon_smallness requires 0 < eps < 1");
    }
    const double e2 = eps * eps;
    return 2.0 * e2 + std::pow(eps, 5) / (1.0 - e2) + 2.0 * e2 / (1.0 - eps) <= eps / 4.0;
}

/// p_eps = eps / (eps/2 + 1/eps).
inline double p_epsilon(double eps) { return eps / (eps / 2.0 + 1.0 / eps); }

/// b_eps = (ln(p/(eps^2 (1-p))))^{-1} at p = p_eps.
inline double long_coefficient(double eps) {
    const double p = p_epsilon(eps);
    return 1.0 / std::log(p / (eps * eps * (1.0 - p)));
}

/// d_eps = b_eps ln(4/eps^2).
inline double long_offset(double eps) { return long_coefficient(eps) * std::log(4.0 / (eps * eps)); }

/**
 * Right side of omega >= 1 + 2c y^2 + Delta((1-p)omega)^L + c^2 y^4/(1-y^2) + 2c y^2/(1-y)
 * with y = p omega / c. Requires (1-p)omega < 1 and y < 1.
 */
inline double long_rhs(double delta_max, double c, double p, double omega, double L) {
    const double y = p * omega / c;
    if (!((1.0 - p) * omega < 1.0) || !(y < 1.0)) {
        throw std::domain_error("long_rhs requires (1-p)omega < 1 and p omega / c < 1");
    }
    return 1.0 + 2.0 * c * y * y + delta_max * std::pow((1.0 - p) * omega, L) + c * c * std::pow(y, 4) / (1.0 - y * y) +
           2.0 * c * y * y / (1.0 - y);
}

/// Right side of eps/p >= 1/eps + eps/4 + (Delta/eps) (eps^2 (1-p)/p)^L.
inline double subst_rhs(double delta_max, double eps, double p, double L) {
    return 1.0 / eps + eps / 4.0 + (delta_max / eps) * std::pow(eps * eps * (1.0 - p) / p, L);
}

inline BoundResult long_cycle_params(double delta_max, double eps) {
    if (!check_epsilon_smallness(eps)) {
        throw std::domain_error("eps = " + std::to_string(eps) + " fails the smallness condition");
    }
    if (delta_max < 1) {
        throw std::invalid_argument("long_cycle_params requires Delta >= 1");
    }
    BoundResult res;
    res.c = eps;
    res.y = eps;
    const double p = p_epsilon(eps);
    res.p = p;
    res.omega = res.y * res.c / p;
    res.b_coeff = long_coefficient(eps);
    res.d_coeff = long_offset(eps);
    const double L = std::ceil(*res.b_coeff * (std::log(delta_max) + std::log(4.0 / (eps * eps))) - 1e-12);
    res.L = L;
    res.palette_size = ceil_palette(eps, delta_max);
    // At the rounded-up L the substituted inequality is tight up to rounding.
    res.feasible = res.y < 1.0 && res.y < p / (res.c * (1.0 - p)) && eps / p >= subst_rhs(delta_max, eps, p, L) * (1.0 - 1e-12);
    return res;
}

// ---------------------------------------------------------------------------
// Two-phase assembly.

struct GirthRequirement {
    std::size_t r;
    std::size_t girth;  // 2r + 1
    double a;           // a_{eps/2}
    double b;           // b_{eps/2}
    double d;           // d_{eps/2}
    double L1;          // 2 a (r-2) ln Delta + 2
    double L2;          // b ln Delta + d
    bool feasible;      // L1 > L2 at this Delta
    double crossover_log_delta;  // L1 > L2 exactly when ln Delta exceeds this
};

/**
 * Same as girth_requirement but at ln Delta, which stays representable
 * where Delta itself overflows a double.
 */
inline GirthRequirement girth_requirement_log(double eps, double log_delta) {
    const double h = eps / 2.0;
    if (!(h > 0.0) || h >= 1.0) {
        throw std::domain_error("girth_requirement requires 0 < eps < 2");
    }
    if (!check_epsilon_smallness(h)) {
        throw std::domain_error("eps/2 = " + std::to_string(h) + " fails the smallness condition");
    }
    if (!(log_delta >= std::log(2.0))) {
        throw std::invalid_argument("girth_requirement requires Delta >= 2");
    }
    GirthRequirement out{};
    out.a = short_coefficient(h);
    out.b = long_coefficient(h);
    out.d = long_offset(h);
    const double ratio = out.b / (2.0 * out.a);
    out.r = static_cast<std::size_t>(std::floor(ratio)) + 3;
    out.girth = 2 * out.r + 1;
    const double slope = 2.0 * out.a * (static_cast<double>(out.r) - 2.0);
    out.L1 = slope * log_delta + 2.0;
    out.L2 = out.b * log_delta + out.d;
    out.feasible = out.L1 > out.L2;
    out.crossover_log_delta = (out.d - 2.0) / (slope - out.b);
    return out;
}

/**
 * Smallest r with r - 2 > b/(2a) (coefficients at eps/2), the girth 2r+1 it
 * demands, and whether L1 > L2 already holds at this Delta.
 */
inline GirthRequirement girth_requirement(double eps, double delta_max) {
    if (delta_max < 2) {
        throw std::invalid_argument("girth_requirement requires Delta >= 2");
    }
    return girth_requirement_log(eps, std::log(delta_max));
}

}  // namespace acyclic::bounds

#endif  // ACYCLIC_BOUNDS_HPP
