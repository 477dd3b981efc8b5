#pragma once

#include "addvol/affine.hpp"
#include "addvol/error.hpp"
#include "addvol/extremal.hpp"
#include "addvol/geometry.hpp"
#include "addvol/json_io.hpp"
#include "addvol/morphisms.hpp"
#include "addvol/numeric.hpp"
#include "addvol/reduction.hpp"
#include "addvol/relations.hpp"
#include "addvol/search.hpp"
#include "addvol/set1d.hpp"
#include "addvol/set2d.hpp"
