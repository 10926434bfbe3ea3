#pragma once

#include "fueterlab/appell.hpp"

namespace fueterlab {

/// C_{n+1}(f) = sum_k x0^k Laplacian(f_k), computed through full expansion
/// so the closed forms of the action theorems stay independent checks.
NCPoly map_C(const SliceCoeffMatrix& f);

/// tau_{n+1}(f) = Laplacian(V^n f) = 2^n n! Laplacian(f_n).
NCPoly map_tau(const SliceCoeffMatrix& f);

/// map_C(qbar^k q^j) against 0 (j < 2) or -2(j-1)j M_{k,j-2}.
VerificationReport check_C_action(int n, int k, int j);

/// map_tau(qbar^k q^j) against 0 (j < 2) or -2^{n+1} n! j(j-1) Q_{j-2}.
VerificationReport check_tau_action(int n, int k, int j);

/// D^n(map_C(f)) = 2^{-n} map_tau(f).
VerificationReport check_relation_R1(const SliceCoeffMatrix& f);

/// D^n(M_{k,j-2}) = n! Q_{j-2} when k = n, and 0 when k < n.
VerificationReport check_Dn_M(int n, int k, int j);

/// Coefficient transform of the C_{n+1} range expansion:
/// beta_{k,s} = -2(s+1)(s+2) alpha_{k,s+2}. Row-major matrices of
/// quaternions, beta has two fewer columns.
std::vector<std::vector<QuatE>> range_C_series_coeffs(
    const std::vector<std::vector<QuatE>>& alpha);

/// The two readings of the tau_{n+1} range coefficients. The closed-form
/// V^n action keeps only the top row of the polyanalytic decomposition,
/// while applying tau term-by-term to the basis expansion sums over all
/// rows; the engine computes both and flags when they differ.
struct TauRangeCoeffs {
    std::vector<QuatE> top_row;  // matches map_tau = Laplacian o V^n
    std::vector<QuatE> row_sum;  // term-by-term basis reading
    bool readings_agree = true;
};
TauRangeCoeffs range_tau_series_coeffs(const std::vector<std::vector<QuatE>>& alpha);

/// Asserts that map_C of the series with coefficients alpha equals
/// sum M_{k,s} beta_{k,s} with beta from range_C_series_coeffs.
VerificationReport check_range_C_series(const std::vector<std::vector<QuatE>>& alpha);

/// Asserts that map_tau of the series equals sum Q_s beta_s under the
/// top-row reading; reports the row-sum reading in the notes when the two
/// differ.
VerificationReport check_range_tau_series(const std::vector<std::vector<QuatE>>& alpha);

/// Builds the order-(rows) matrix with the given quaternion coefficients.
SliceCoeffMatrix matrix_from_coeffs(const std::vector<std::vector<QuatE>>& alpha);

}  // namespace fueterlab
