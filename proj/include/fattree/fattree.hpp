#pragma once

#include "fattree/catalog.hpp"
#include "fattree/designer.hpp"
#include "fattree/error.hpp"
#include "fattree/estimator.hpp"
#include "fattree/expansion.hpp"
#include "fattree/placement.hpp"
#include "fattree/rack_view.hpp"
#include "fattree/rational.hpp"
#include "fattree/report.hpp"
#include "fattree/request_io.hpp"
#include "fattree/sweep.hpp"
#include "fattree/units.hpp"
#include "fattree/wiring.hpp"
