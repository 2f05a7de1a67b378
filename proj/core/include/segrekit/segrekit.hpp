#pragma once

#include "segrekit/binomial.hpp"
#include "segrekit/conjecture.hpp"
#include "segrekit/error.hpp"
#include "segrekit/format.hpp"
#include "segrekit/json_io.hpp"
#include "segrekit/matrices.hpp"
#include "segrekit/matrix.hpp"
#include "segrekit/polynomial.hpp"
#include "segrekit/rational.hpp"
#include "segrekit/scalars.hpp"
#include "segrekit/series.hpp"
#include "segrekit/spectra.hpp"
#include "segrekit/squarefree.hpp"
