#pragma once

// Umbrella header: exact shifting, matching search, extremal bounds, and
// constructive matching extraction for k-uniform set families.

#include "shg/arith.hpp"
#include "shg/bounds.hpp"
#include "shg/errors.hpp"
#include "shg/extract.hpp"
#include "shg/family.hpp"
#include "shg/io.hpp"
#include "shg/report_json.hpp"
#include "shg/rng.hpp"
#include "shg/shift.hpp"
#include "shg/solver.hpp"
#include "shg/suites.hpp"
