#pragma once

#include "hazepde/image.hpp"
#include "hazepde/metrics.hpp"
#include "hazepde/netpbm.hpp"
#include "hazepde/operators.hpp"
#include "hazepde/pipeline.hpp"
#include "hazepde/refine.hpp"
#include "hazepde/scattering.hpp"
#include "hazepde/solver.hpp"
