#pragma once

#include "holocert/diffop/diffop.hpp"
#include "holocert/diffop/pcurvature.hpp"
#include "holocert/diffop/recurrence.hpp"
#include "holocert/diffop/singular.hpp"
