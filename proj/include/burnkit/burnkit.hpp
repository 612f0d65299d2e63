#pragma once

#include "burnkit/approx.hpp"
#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/exact.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/paths.hpp"
#include "burnkit/reduction_sat.hpp"
#include "burnkit/reduction_vc.hpp"
