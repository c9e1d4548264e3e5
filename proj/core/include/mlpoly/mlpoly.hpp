#pragma once

#include "mlpoly/caputo.hpp"
#include "mlpoly/config.hpp"
#include "mlpoly/errors.hpp"
#include "mlpoly/fokker_planck.hpp"
#include "mlpoly/frac_poly.hpp"
#include "mlpoly/fractional_hermite.hpp"
#include "mlpoly/gamma.hpp"
#include "mlpoly/mittag_leffler.hpp"
#include "mlpoly/ml_polynomials.hpp"
#include "mlpoly/serialize.hpp"
#include "mlpoly/sheffer.hpp"
#include "mlpoly/summation.hpp"
#include "mlpoly/verify.hpp"
