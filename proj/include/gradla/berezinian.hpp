#pragma once

#include "gradla/gdet.hpp"

namespace gradla {

struct ParityBlocks {
    int r0 = 0, r1 = 0;
    GradedMatrix x00, x01, x10, x11;
};

// Needs nu with all even degrees first (NotParitySorted otherwise).
ParityBlocks parity_blocks(const GradedMatrix& x);

struct UDL {
    GradedMatrix u, d, l; // X = U D L
};
// Upper unitriangular x block-diagonal x lower unitriangular; needs X homogeneous of even degree
// and X11 invertible.
UDL udl(const GradedMatrix& x);

// sigma(x,x)^{-r1 (r0 - r1)} Gdet_sigma(X00 - X01 X11^{-1} X10) Gdet_sigma(X11)^{-1}
AlgebraElement gber(const GradedMatrix& x, const Multiplier& sigma);
AlgebraElement gber0(const GradedMatrix& x);

// Classical Berezinian of a matrix over an algebra whose lambda is the super sign through parity,
// computed entirely in that algebra.
AlgebraElement ber_super(const GradedMatrix& y);

// Gdet_sigma(X11) = lambda(x, pi)^{r1} Gdet_sigma(T_pi(X11)) where T_pi shifts the degrees by pi.
AlgebraElement gdet_sigma_shifted(const GradedMatrix& x11, const Multiplier& sigma, const GroupElement& pi);

} // namespace gradla
