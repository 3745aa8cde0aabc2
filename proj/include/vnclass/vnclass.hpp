#pragma once

#include "bench.hpp"
#include "counting.hpp"
#include "cycle_index.hpp"
#include "errors.hpp"
#include "known_values.hpp"
#include "numtheory.hpp"
#include "oracle.hpp"
#include "verify.hpp"
