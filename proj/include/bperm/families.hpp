// include/bperm/families.hpp - generating polynomials of B_n and its
// subsets by enumeration, and the closed forms they are checked against.

#pragma once

#include <bperm/laurent_poly.hpp>
#include <bperm/signed_permutation.hpp>

#include <string_view>
#include <vector>

namespace bperm {

/// Which statistics are carried by which variables.
enum class Bundle {
    FIX,         // Y0^fix+ Y1^fix- Z^neg
    PIX,         // Y0^pix+ Y1^pix- Z^neg
    PIX_L,       // q^length Y0^pix+ Y1^pix- Z^neg
    FLAG,        // t^fdes q^fmaj Y0^fix+ Y1^fix- Z^neg
    DES_MAJ_FIX, // t^des q^maj Y0^fix, plain permutations only
    INV_PIX,     // q^inv Y0^pix, plain
    IMAJ_PIX,    // q^imaj Y0^pix, plain
    MAJ,         // q^maj, plain
    INV,         // q^inv, plain
    IMAJ,        // q^imaj, plain
};

std::string_view to_string(Bundle b) noexcept;
/// True for bundles that range over plain permutations only.
bool is_plain_bundle(Bundle b) noexcept;

/// Hard limit on enumeration size: 2^cap * cap! elements, cap taken from
/// BPERM_NMAX_CAP (default 7).
int nmax_cap();
long long element_budget();
/// Throws Error{cap_exceeded} when `elements` exceeds element_budget().
void require_budget(long long elements, std::string_view what);

/// Sum over the members of `cls` of order n of the bundle's monomial. Plain
/// bundles range over cls intersected with S_n. Throws Error{cap_exceeded}.
LaurentPoly enum_polynomial(int n, Bundle bundle, SubsetClass cls = SubsetClass::B);

/// d_0..d_{n_max} from d_n = n d_{n-1} + (-1)^n.
std::vector<BigInt> derangement_numbers(int n_max);
/// d_n as the alternating sum of n!/k!, the coefficient form of
/// sum d_n u^n/n! = e^{-u}/(1-u).
BigInt derangement_number_alternating(int n);
/// d_n as a sum of positive terms (2k)(2k+2)_{n-2k-1} plus [n even].
BigInt derangement_number_positive(int n);

/// n! times the u^n coefficient of exp(u(Y0 + Y1 Z)) / ((1 - u(1+Z)) exp(u(1+Z))).
LaurentPoly b_exponential_form(int n);
/// Four-index multinomial sum of Y0^i Y1^j Z^(j+k) d_(k+l).
LaurentPoly b_four_index_sum(int n);
/// q-multinomial sum of q^C(j+k+1,2) Y0^i (Y1 Z)^j (Z q^i)^k D_(k+l)(q).
LaurentPoly length_four_index_sum(int n);
/// D_n(q) as a positive sum over the position 2k of the leftmost trough.
LaurentPoly derangement_maj_closed_form(int n);
/// D_n^B(q,Z) as an alternating q^2-binomial sum.
LaurentPoly signed_derangement_closed_form(int n);

/// Closed form registered under an identity tag: "1.2", "2.2", "3.5",
/// "6.8" or "6.18". Throws Error{unknown_identity}.
LaurentPoly closed_form(std::string_view id, int n);

} // namespace bperm
