#pragma once

#include "qappell/appell.hpp"
#include "qappell/errors.hpp"
#include "qappell/grid.hpp"
#include "qappell/multipoly.hpp"
#include "qappell/operators.hpp"
#include "qappell/qcontext.hpp"
#include "qappell/rational.hpp"
#include "qappell/report.hpp"
#include "qappell/setalgebra.hpp"
#include "qappell/suites.hpp"
#include "qappell/truncseries.hpp"
