#pragma once

#include "tangle/core.hpp"
#include "tangle/error.hpp"
#include "tangle/explore.hpp"
#include "tangle/io.hpp"
#include "tangle/reduction.hpp"
#include "tangle/reduction_io.hpp"
#include "tangle/render.hpp"
#include "tangle/search.hpp"
#include "tangle/simple.hpp"
