#pragma once

#include "fockindex/rational.hpp"
#include "fockindex/series.hpp"
#include "fockindex/symmetric.hpp"
#include "fockindex/genera.hpp"
#include "fockindex/bundles.hpp"
#include "fockindex/manifolds.hpp"
#include "fockindex/factor_expression.hpp"
#include "fockindex/index_engine.hpp"
#include "fockindex/statmech.hpp"
#include "fockindex/special_functions.hpp"
#include "fockindex/spectral.hpp"
#include "fockindex/json_io.hpp"
