#pragma once

#include "reductions/bipartition.hpp"
#include "reductions/gadget.hpp"
#include "reductions/regular_bipartite.hpp"
#include "reductions/three_partition.hpp"
#include "reductions/zero_sum.hpp"
