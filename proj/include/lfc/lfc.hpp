#pragma once

#include "lfc/errors.hpp"
#include "lfc/fractal_number.hpp"
#include "lfc/gamma.hpp"
#include "lfc/json_io.hpp"
#include "lfc/numerics.hpp"
#include "lfc/power_series.hpp"
#include "lfc/solver.hpp"
#include "lfc/testlib.hpp"
