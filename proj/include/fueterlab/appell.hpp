#pragma once

#include "fueterlab/report.hpp"
#include "fueterlab/slicepoly.hpp"

namespace fueterlab {

/// Clifford-Appell polynomial Q_k = sum_j T^k_j q^(k-j) qbar^j, kept in
/// both the expanded and the (k,j)-coefficient representation.
struct AppellPoly {
    int k = 0;
    NCPoly body;
    SliceCoeffMatrix matrix{1};
};

/// x0^k Q_s.
struct GenAppellPoly {
    int k = 0;
    int s = 0;
    NCPoly body;
};

/// T^k_j = 2(k-j+1)/((k+1)(k+2)).
Rational T_coeff(int k, int j);

/// Q_k; Q_k for k < 0 is the zero polynomial so that identities with
/// Q_{j-2} hold uniformly at j = 0, 1.
AppellPoly appell_Q(int k);

GenAppellPoly gen_appell_M(int k, int s);

/// (Dbar/2) Q_k = k Q_{k-1}, exact.
VerificationReport check_appell_property(int k);

/// Dbar^j Q_s = 2^j s!/(s-j)! Q_{s-j}, exact.
VerificationReport check_Dbar_power(int j, int s);

/// Dbar^{k+1} M_{k,s} = sum_{j=1}^{k+1} 2^j C(k+1,j) k! s!/((j-1)!(s-j)!)
/// M_{j-1,s-j}, exact.
VerificationReport check_poly_appell(int k, int s);

}  // namespace fueterlab
