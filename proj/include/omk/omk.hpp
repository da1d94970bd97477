#pragma once

#include "omk/error.hpp"
#include "omk/exactnum/cyclotomic.hpp"
#include "omk/exactnum/parse.hpp"
#include "omk/exactnum/polynomial.hpp"
#include "omk/exactnum/rational.hpp"
#include "omk/invariants/invariants.hpp"
#include "omk/matgroup/group.hpp"
#include "omk/matgroup/matrix.hpp"
#include "omk/matgroup/reflections.hpp"
#include "omk/motivic/parse.hpp"
#include "omk/motivic/weight.hpp"
#include "omk/sectors/sectors.hpp"
