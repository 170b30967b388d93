#pragma once

#include "elliptic_bohr/condenser.hpp"
#include "elliptic_bohr/coefficients.hpp"
#include "elliptic_bohr/derivative_bounds.hpp"
#include "elliptic_bohr/errors.hpp"
#include "elliptic_bohr/extremal.hpp"
#include "elliptic_bohr/inequalities.hpp"
#include "elliptic_bohr/radius.hpp"
#include "elliptic_bohr/serialization.hpp"
#include "elliptic_bohr/summation.hpp"
