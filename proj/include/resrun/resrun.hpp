#pragma once

// Umbrella header.

#include "resrun/char_table.hpp"
#include "resrun/errors.hpp"
#include "resrun/field.hpp"
#include "resrun/lemma_checks.hpp"
#include "resrun/numeric.hpp"
#include "resrun/run_counts.hpp"
#include "resrun/serialize.hpp"
#include "resrun/sums.hpp"
#include "resrun/sweep.hpp"
#include "resrun/two_squares.hpp"

namespace resrun {

inline constexpr const char* kVersion = "0.1.0";

} // namespace resrun
