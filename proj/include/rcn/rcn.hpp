#ifndef RCN_RCN_HPP
#define RCN_RCN_HPP

#include "rcn/bounds.hpp"
#include "rcn/decomposition.hpp"
#include "rcn/digraph.hpp"
#include "rcn/discovery.hpp"
#include "rcn/generators.hpp"
#include "rcn/geometry.hpp"
#include "rcn/halfperiod.hpp"
#include "rcn/kedges.hpp"
#include "rcn/numeric.hpp"
#include "rcn/point_io.hpp"

#endif
