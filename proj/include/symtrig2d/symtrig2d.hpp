#pragma once

#include "analysis.hpp"
#include "basis.hpp"
#include "cosine.hpp"
#include "grid.hpp"
#include "interpolation.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "transforms.hpp"
#include "types.hpp"
