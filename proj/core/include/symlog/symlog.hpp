#pragma once

#include "symlog/error.hpp"
#include "symlog/gen.hpp"
#include "symlog/linalg.hpp"
#include "symlog/rng.hpp"
#include "symlog/rootlog.hpp"
#include "symlog/specfact.hpp"
#include "symlog/symmetry.hpp"
#include "symlog/verify.hpp"
