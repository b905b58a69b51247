#pragma once

#include "hyps/error.hpp"
#include "hyps/hypersym.hpp"
#include "hyps/json_io.hpp"
#include "hyps/muord.hpp"
#include "hyps/pel.hpp"
#include "hyps/polygon.hpp"
#include "hyps/strata.hpp"
#include "hyps/weil.hpp"
