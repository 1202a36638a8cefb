// Umbrella header: pulls in the whole appellcheck library.
#pragma once

#include "appellcheck/accel.hpp"
#include "appellcheck/appell.hpp"
#include "appellcheck/arith.hpp"
#include "appellcheck/branch_fit.hpp"
#include "appellcheck/catalog.hpp"
#include "appellcheck/closed_forms.hpp"
#include "appellcheck/kdf.hpp"
#include "appellcheck/report.hpp"
#include "appellcheck/series.hpp"
#include "appellcheck/types.hpp"
