#ifndef BRILL_BRILL_HPP
#define BRILL_BRILL_HPP

// Exact-arithmetic toolkit for Brill's equations of the Chow variety of
// products of linear forms: sparse symmetric/tensor/wedge elements over
// exact rationals, the Brill pipeline (polarizations, Girard coefficients,
// Q_d, pi_{d,d}, B and its complete polarization), GL(V) weight
// combinatorics, and the Hermitian pairing that detects the image of
// Brill's map.

#include "brill/brill_map.hpp"
#include "brill/caps.hpp"
#include "brill/chow.hpp"
#include "brill/closed_forms.hpp"
#include "brill/elements.hpp"
#include "brill/girard.hpp"
#include "brill/golden.hpp"
#include "brill/json_io.hpp"
#include "brill/matrix.hpp"
#include "brill/monomial.hpp"
#include "brill/pairing.hpp"
#include "brill/plethysm.hpp"
#include "brill/rational.hpp"
#include "brill/rep.hpp"
#include "brill/symbolic.hpp"

#endif
