#pragma once

#include "conway.hpp"
#include "diagram.hpp"
#include "diagram_sum.hpp"
#include "error.hpp"
#include "exact_rank.hpp"
#include "generators.hpp"
#include "gf2.hpp"
#include "lattice.hpp"
#include "moves.hpp"
#include "parity.hpp"
#include "theta.hpp"
#include "verification.hpp"
