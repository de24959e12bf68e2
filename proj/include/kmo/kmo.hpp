#pragma once

#include "kmo/errors.hpp"
#include "kmo/grid.hpp"
#include "kmo/octonion.hpp"
#include "kmo/octonion_sequences.hpp"
#include "kmo/quad.hpp"
#include "kmo/rational.hpp"
#include "kmo/report.hpp"
#include "kmo/sequences.hpp"
#include "kmo/verifier.hpp"
