#pragma once

// Umbrella header.

#include "satseq/constructions.hpp"
#include "satseq/core.hpp"
#include "satseq/error.hpp"
#include "satseq/exact.hpp"
#include "satseq/ilp.hpp"
#include "satseq/io.hpp"
#include "satseq/lp_export.hpp"
#include "satseq/saturation.hpp"
#include "satseq/search.hpp"
