#pragma once

#include "gext/error.hpp"
#include "gext/rim.hpp"
#include "gext/monomial_matrix.hpp"
#include "gext/resolution.hpp"
#include "gext/trapezia.hpp"
#include "gext/polynomial.hpp"
#include "gext/snf.hpp"
#include "gext/ext.hpp"
#include "gext/io.hpp"
#include "gext/svg.hpp"
