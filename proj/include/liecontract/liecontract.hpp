#pragma once

#include "liecontract/algebra_io.hpp"
#include "liecontract/catalog.hpp"
#include "liecontract/coadjoint.hpp"
#include "liecontract/contraction.hpp"
#include "liecontract/convergence.hpp"
#include "liecontract/error.hpp"
#include "liecontract/lie_algebra.hpp"
#include "liecontract/mn_contraction.hpp"
#include "liecontract/representations.hpp"
#include "liecontract/su2.hpp"
#include "liecontract/tolerances.hpp"
#include "liecontract/transition.hpp"
