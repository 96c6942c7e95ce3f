#ifndef KLR_NILHECKE_HPP
#define KLR_NILHECKE_HPP

#include "klr/multipoly.hpp"
#include "klr/qhalg.hpp"

namespace klr {

// The nil Hecke algebra NH_n is the quiver Hecke algebra of the
// single-vertex quiver at weight n alpha_1.
QhAlgebra nil_algebra(int n);

// e_n = x_2 x_3^2 ... x_n^{n-1} tau_{w_[1,n]}.
QHElement nil_en(int n);

// Action of an NH_n element on Pol_n: x_i by multiplication, tau_i by the
// Demazure operator. Coefficients must be integer constants.
MultiPoly nil_act(const QHElement& e, const MultiPoly& f);

}  // namespace klr

#endif
