#pragma once

#include "holocert/certify/certificate.hpp"
#include "holocert/certify/frobenius.hpp"
#include "holocert/certify/split.hpp"
