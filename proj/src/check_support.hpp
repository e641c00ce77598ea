// src/check_support.hpp - shared plumbing for the identity checkers.

#pragma once

#include <bperm/identities.hpp>
#include <bperm/laurent_poly.hpp>
#include <bperm/trunc_series.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bperm::detail {

struct CheckParams {
    int n_max = 0;
    int u_order = 0;
    int t_order = 0;
    int q_order = 0;
    int s_max = 0;
};

using CheckResult = std::optional<Witness>;
using Checker = CheckResult (*)(const CheckParams &);

CheckResult compare(const std::string &location, const LaurentPoly &expected, const LaurentPoly &actual);
CheckResult compare(const std::string &location, const BigInt &expected, const BigInt &actual);
/// Coefficientwise, locations "<prefix>u^k" (or t^k, q^k).
CheckResult compare(const std::string &prefix, const TruncSeries &expected, const TruncSeries &actual);
/// A failure that is not a coefficient mismatch.
Witness mismatch(const std::string &location, std::string expected, std::string actual);

std::string at_n(int n);
std::string at_ns(int n, int s);

/// u-series modulo u^u_order with q (and optionally t) truncated modulo
/// q^q_order and t^t_order.
struct Frame {
    int order; // highest kept power of u
    Caps caps;

    static Frame from(const CheckParams &p, bool with_t);
    static Frame exact(int order) { return Frame{order, Caps{}}; }

    [[nodiscard]] TruncSeries constant(const LaurentPoly &c) const;
    /// (1 - c u)^{-1}
    [[nodiscard]] TruncSeries geometric(const LaurentPoly &c) const;
    /// prod_{k<count} (1 - a step^k u), or the infinite product if count is empty.
    [[nodiscard]] TruncSeries poch(const LaurentPoly &a, const Monomial &step, std::optional<int> count) const;
    /// sum_n coeffs[n] / denominators[n] u^n, each quotient expanded modulo the caps.
    [[nodiscard]] TruncSeries quotient_series(const std::vector<LaurentPoly> &coeffs,
                                              const std::vector<LaurentPoly> &denominators) const;
    [[nodiscard]] LaurentPoly inverse(const LaurentPoly &p) const;
};

LaurentPoly P(const char *text);
Monomial qpow(int k);
Monomial q2pow(int k);

// Checkers, one per registry tag.
CheckResult check_1_2(const CheckParams &);
CheckResult check_thm1_1(const CheckParams &);
CheckResult check_1_7(const CheckParams &);
CheckResult check_1_8(const CheckParams &);
CheckResult check_1_9(const CheckParams &);
CheckResult check_2_1(const CheckParams &);
CheckResult check_2_2(const CheckParams &);
CheckResult check_2_4(const CheckParams &);
CheckResult check_3_2(const CheckParams &);
CheckResult check_3_3(const CheckParams &);
CheckResult check_3_5(const CheckParams &);
CheckResult check_4_1(const CheckParams &);
CheckResult check_5_1(const CheckParams &);
CheckResult check_5_2(const CheckParams &);
CheckResult check_5_3(const CheckParams &);
CheckResult check_5_6(const CheckParams &);
CheckResult check_5_7(const CheckParams &);
CheckResult check_5_8(const CheckParams &);
CheckResult check_6_2_3(const CheckParams &);
CheckResult check_6_5(const CheckParams &);
CheckResult check_6_6(const CheckParams &);
CheckResult check_6_7(const CheckParams &);
CheckResult check_6_8(const CheckParams &);
CheckResult check_6_9(const CheckParams &);
CheckResult check_6_10(const CheckParams &);
CheckResult check_6_12(const CheckParams &);
CheckResult check_6_14(const CheckParams &);
CheckResult check_6_15(const CheckParams &);
CheckResult check_6_16(const CheckParams &);
CheckResult check_6_17(const CheckParams &);
CheckResult check_6_18(const CheckParams &);
CheckResult check_6_19(const CheckParams &);
CheckResult check_6_22(const CheckParams &);
CheckResult check_6_24(const CheckParams &);
CheckResult check_6_25(const CheckParams &);
CheckResult check_6_26(const CheckParams &);
CheckResult check_6_27(const CheckParams &);

} // namespace bperm::detail
