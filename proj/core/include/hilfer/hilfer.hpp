#pragma once

#include "hilfer/bounds.hpp"
#include "hilfer/error.hpp"
#include "hilfer/frac_calculus.hpp"
#include "hilfer/grid_function.hpp"
#include "hilfer/kernel.hpp"
#include "hilfer/mesh.hpp"
#include "hilfer/order.hpp"
#include "hilfer/problem.hpp"
#include "hilfer/quadrature.hpp"
#include "hilfer/solver.hpp"
#include "hilfer/special_functions.hpp"
