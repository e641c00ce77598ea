// include/bperm/q_builders.hpp - q-ascending factorials, q-integers and
// q-multinomial coefficients.

#pragma once

#include <bperm/laurent_poly.hpp>

#include <span>

namespace bperm {

/// (a; step)_n = prod_{k<n} (1 - a step^k); 1 when n = 0.
LaurentPoly q_pochhammer(const LaurentPoly &a, const Monomial &step, int n);

/// (base; base)_n.
LaurentPoly q_factorial_pochhammer(const Monomial &base, int n);

/// [n]_base = 1 + base + ... + base^(n-1).
LaurentPoly q_integer(int n, const Monomial &base);

/// [n]_base! = [1]_base ... [n]_base.
LaurentPoly q_factorial(int n, const Monomial &base);

/// (base;base)_n / prod (base;base)_{m_i}, by exact division. `base` must be
/// a positive power of a single variable.
LaurentPoly gauss_multinomial(int n, std::span<const int> parts, const Monomial &base);

LaurentPoly gauss_binomial(int n, int k, const Monomial &base);

/// The variable that `base` is a positive power of; throws
/// Error{inexact_division} otherwise.
Var base_variable(const Monomial &base);

} // namespace bperm
