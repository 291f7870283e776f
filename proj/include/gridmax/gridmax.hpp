#pragma once

#include "gridmax/arith.hpp"
#include "gridmax/cubicle.hpp"
#include "gridmax/formula.hpp"
#include "gridmax/oracle.hpp"
#include "gridmax/pcr.hpp"
#include "gridmax/pointset.hpp"
