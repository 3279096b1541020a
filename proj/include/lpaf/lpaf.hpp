// Umbrella header: the whole library except JSON output (json_io.hpp).
#pragma once

#include "lpaf/af.hpp"
#include "lpaf/caf.hpp"
#include "lpaf/core.hpp"
#include "lpaf/dynamics.hpp"
#include "lpaf/equivalence.hpp"
#include "lpaf/generate.hpp"
#include "lpaf/io.hpp"
#include "lpaf/lp.hpp"
#include "lpaf/translate.hpp"
#include "lpaf/verdict.hpp"
