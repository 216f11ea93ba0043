#pragma once

#include "holocert/holoseries/catalog.hpp"
#include "holocert/holoseries/expand.hpp"
#include "holocert/holoseries/lucas.hpp"
#include "holocert/holoseries/series.hpp"
