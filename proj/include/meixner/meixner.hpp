#pragma once

// Umbrella header for the meixner library.

#include "meixner/exact.hpp"
#include "meixner/combinat.hpp"
#include "meixner/poly.hpp"
#include "meixner/params.hpp"
#include "meixner/sheffer.hpp"
#include "meixner/weyl_expr.hpp"
#include "meixner/weyl.hpp"
#include "meixner/operators.hpp"
#include "meixner/summation.hpp"
#include "meixner/gammafn.hpp"
#include "meixner/quadrature.hpp"
#include "meixner/bessel.hpp"
#include "meixner/measures.hpp"
#include "meixner/fock.hpp"
#include "meixner/transforms.hpp"
