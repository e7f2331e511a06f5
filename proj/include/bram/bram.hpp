#pragma once

#include "bram/bitrow.hpp"
#include "bram/common.hpp"
#include "bram/embedder.hpp"
#include "bram/exact_ramsey.hpp"
#include "bram/gen.hpp"
#include "bram/graph.hpp"
#include "bram/lll.hpp"
#include "bram/pattern.hpp"
#include "bram/ramsey_bounds.hpp"
#include "bram/rng.hpp"
#include "bram/serialize.hpp"
#include "bram/verify.hpp"
#include "bram/zarankiewicz.hpp"
