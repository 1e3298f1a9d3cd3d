#pragma once

#include "semirank/combinatorics.hpp"
#include "semirank/errors.hpp"
#include "semirank/families.hpp"
#include "semirank/prime_search.hpp"
#include "semirank/ranks.hpp"
#include "semirank/semigroup.hpp"
#include "semirank/subset_mask.hpp"
#include "semirank/table_io.hpp"
#include "semirank/transformation.hpp"
