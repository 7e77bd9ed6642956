#pragma once

// Exact-arithmetic toolkit for Sperner statistics: modules, Sperner
// polynomials, certified fixed points, iteration limits, and seeded Monte
// Carlo verification.

#include "selector/distribution.hpp"
#include "selector/enumerate.hpp"
#include "selector/error.hpp"
#include "selector/fixed_point.hpp"
#include "selector/io.hpp"
#include "selector/iterate.hpp"
#include "selector/module_calc.hpp"
#include "selector/poly.hpp"
#include "selector/rational.hpp"
#include "selector/rng.hpp"
#include "selector/simulate.hpp"
#include "selector/sperner.hpp"
#include "selector/verify.hpp"
