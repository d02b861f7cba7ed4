#pragma once

#include "sasaki_hodge/boothby_wang.hpp"
#include "sasaki_hodge/cohomology_ring.hpp"
#include "sasaki_hodge/complete_intersection.hpp"
#include "sasaki_hodge/errors.hpp"
#include "sasaki_hodge/horikawa.hpp"
#include "sasaki_hodge/integer.hpp"
#include "sasaki_hodge/pair_search.hpp"
#include "sasaki_hodge/reference_tables.hpp"
#include "sasaki_hodge/surface_invariants.hpp"
#include "sasaki_hodge/surface_tuples.hpp"
#include "sasaki_hodge/verification.hpp"
