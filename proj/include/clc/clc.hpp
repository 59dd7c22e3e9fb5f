#pragma once

// Everything needed to tally with the Continuous Llull Condorcet method.
// verify.hpp (property checks and generators) is not included here.

#include "clc/candidates.hpp"
#include "clc/closure.hpp"
#include "clc/errors.hpp"
#include "clc/matrix.hpp"
#include "clc/ordering.hpp"
#include "clc/profile.hpp"
#include "clc/projection.hpp"
#include "clc/rating.hpp"
#include "clc/rational.hpp"
#include "clc/relation.hpp"
#include "clc/report.hpp"
#include "clc/tally.hpp"
