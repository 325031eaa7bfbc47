#pragma once

#include "tropic/semifield.hpp"
#include "tropic/matrix.hpp"
#include "tropic/closure.hpp"
#include "tropic/span_min.hpp"
#include "tropic/scheduling.hpp"
#include "tropic/grid_search.hpp"
