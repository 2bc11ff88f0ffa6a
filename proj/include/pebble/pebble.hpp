#ifndef PEBBLE_PEBBLE_HPP
#define PEBBLE_PEBBLE_HPP

#include "composition.hpp"
#include "constructions.hpp"
#include "distribution.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "graph.hpp"
#include "lp.hpp"
#include "perm.hpp"
#include "rational.hpp"
#include "serialize.hpp"
#include "solver.hpp"
#include "target.hpp"

#endif
