// Copyright (c) supbound contributors.
// SPDX-License-Identifier: Apache-2.0
#include "supbound/linear.hpp"

#include <stdexcept>

namespace supbound {

namespace {

bool all_zero(const std::vector<Rational>& coeffs) {
    for (const Rational& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace

std::optional<std::vector<Rational>> solve_linear_feasibility(int num_vars,
                                                              const std::vector<LinIneq>& system) {
    for (const LinIneq& q : system)
        if (static_cast<int>(q.coeffs.size()) != num_vars)
            throw std::invalid_argument("inequality width mismatch");

    // Eliminate variables back to front, keeping each stage's rows so the
    // feasible point can be rebuilt by back-substitution.
    std::vector<std::vector<LinIneq>> stages;
    std::vector<LinIneq> rows = system;
    for (int v = num_vars - 1; v >= 0; --v) {
        stages.push_back(rows);
        std::vector<LinIneq> lower, upper, rest;
        for (const LinIneq& q : rows) {
            if (q.coeffs[v].is_zero()) {
                rest.push_back(q);
            } else if (q.coeffs[v] > Rational(0)) {
                lower.push_back(q);  // x_v >= -(rest)/coeff
            } else {
                upper.push_back(q);  // x_v <= (rest)/(-coeff)
            }
        }
        for (const LinIneq& lo : lower) {
            for (const LinIneq& hi : upper) {
                // Combine lo (c>0) and hi (c<0): scale to cancel x_v.
                Rational a = lo.coeffs[v];
                Rational b = Rational(0) - hi.coeffs[v];
                LinIneq mix;
                mix.coeffs.assign(num_vars, Rational(0));
                for (int i = 0; i < num_vars; ++i)
                    mix.coeffs[i] = lo.coeffs[i] * b + hi.coeffs[i] * a;
                mix.coeffs[v] = Rational(0);
                mix.constant = lo.constant * b + hi.constant * a;
                rest.push_back(std::move(mix));
            }
        }
        rows = std::move(rest);
    }
    for (const LinIneq& q : rows) {
        if (!all_zero(q.coeffs)) throw std::logic_error("elimination left a variable");
        if (!(q.constant >= Rational(0))) return std::nullopt;  // 0 >= -constant violated
    }

    // Back-substitute: at stage for variable v all later variables are fixed.
    std::vector<Rational> point(num_vars, Rational(0));
    for (int v = 0; v < num_vars; ++v) {
        const std::vector<LinIneq>& stage = stages[num_vars - 1 - v];
        std::optional<Rational> low, high;
        for (const LinIneq& q : stage) {
            if (q.coeffs[v].is_zero()) continue;
            Rational rest = q.constant;
            for (int i = 0; i < num_vars; ++i)
                if (i != v) rest += q.coeffs[i] * point[i];
            Rational bound = (Rational(0) - rest) / q.coeffs[v];
            if (q.coeffs[v] > Rational(0)) {
                if (!low || bound > *low) low = bound;
            } else {
                if (!high || bound < *high) high = bound;
            }
        }
        Rational chosen = low.value_or(Rational(0));
        if (high && chosen > *high) {
            // Cannot happen on a feasible system; guard against misuse.
            throw std::logic_error("back-substitution found empty interval");
        }
        point[v] = chosen;
    }
    return point;
}

}  // namespace supbound
