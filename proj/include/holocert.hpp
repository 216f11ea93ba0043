#pragma once

#include "holocert/casebook/casebook.hpp"
#include "holocert/certify.hpp"
#include "holocert/diffop.hpp"
#include "holocert/exactfield.hpp"
#include "holocert/holoseries.hpp"
#include "holocert/io/json.hpp"
