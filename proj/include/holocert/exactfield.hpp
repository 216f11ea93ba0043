#pragma once

#include "holocert/errors.hpp"
#include "holocert/exactfield/factor.hpp"
#include "holocert/exactfield/field.hpp"
#include "holocert/exactfield/linalg.hpp"
#include "holocert/exactfield/poly.hpp"
#include "holocert/exactfield/ratfun.hpp"
