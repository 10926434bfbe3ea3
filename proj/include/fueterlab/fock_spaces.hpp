#pragma once

#include "fueterlab/report.hpp"
#include "fueterlab/slicepoly.hpp"

namespace fueterlab {

/// Element of the order-(n+1) polyanalytic range space, stored as the
/// coefficient matrix beta[h][s] (s = 0..n) of sum M_{n-s,h+n-s} beta_{h,s}.
struct ASpaceElement {
    int n = 0;
    std::vector<std::vector<QuatE>> beta;
};

/// Element of the axially-monogenic range space, stored as the coefficient
/// vector beta[h] of sum Q_{h+n} beta_h.
struct ATildeElement {
    int n = 0;
    std::vector<QuatE> beta;
};

/// Coefficient weight of the A-space inner product:
/// [(h+n-s)!]^2 (s!)^2 [(n-s)!]^2 / ((2pi)^{h+n+2-2s} (h+n+2)!).
/// The factorial on (h+n-s) is forced by the norm computation even though
/// the source statement prints the bracket without it.
ExactScalar a_weight(int n, int h, int s);

/// (k+n)! / ((k+n+1)(k+n+2)(2pi)^k).
ExactScalar atilde_weight(int n, int k);

/// <f, g> = sum w(h,s) conj(beta^g) beta^f; both elements must share n.
QuatE inner_A(const ASpaceElement& f, const ASpaceElement& g);

/// <f, g> = sum w(k) conj(beta^g_k) beta^f_k; both elements must share n.
QuatE inner_Atilde(const ATildeElement& f, const ATildeElement& g);

/// beta_{h,s} = -2 n! (2pi)^{h+n+2} (-1)^s (h+n+2)! (2pi)^{n-s}
///              / (s!(n-s)!(h+n-s)!) alpha_{h+n+2}.
ASpaceElement a_element_from_alpha(int n, const std::vector<QuatE>& alpha);

/// beta_h = -2^{n+1} (2pi)^{2(n+1)} n! (h+n+2)(h+n+1)(2pi)^h alpha_{h+n+2}.
ATildeElement atilde_element_from_alpha(int n, const std::vector<QuatE>& alpha);

/// ||C-image||^2_A == 4 n! (n+1)! (2pi)^{2n} sum_{j>=n+2} (2pi)^j j! |alpha_j|^2.
VerificationReport check_range_C_norm(int n, const std::vector<QuatE>& alpha);

/// ||tau-image||^2_Atilde == 4^{n+1} (2pi)^{3n+2} (n!)^2 * same tail sum.
VerificationReport check_range_tau_norm(int n, const std::vector<QuatE>& alpha);

/// Direct-sum inner products over blocks n = 0..N with the block
/// normalizations 1/((n+1)!(2pi)^n) and 1/(4^n (2pi)^{2n} n!).
QuatE inner_frakA(const std::vector<ASpaceElement>& f,
                  const std::vector<ASpaceElement>& g);
QuatE inner_frakAtilde(const std::vector<ATildeElement>& f,
                       const std::vector<ATildeElement>& g);

}  // namespace fueterlab
