#ifndef RAMPART_RAMPART_HPP
#define RAMPART_RAMPART_HPP

#include "rampart/algebra.hpp"
#include "rampart/errors.hpp"
#include "rampart/multipoly.hpp"
#include "rampart/poly_matrix.hpp"
#include "rampart/potts.hpp"
#include "rampart/ramified.hpp"
#include "rampart/rep_theory.hpp"
#include "rampart/roots.hpp"
#include "rampart/set_partition.hpp"
#include "rampart/transfer.hpp"

#endif
