#pragma once

#include "ssav/arith/f2_linear.hpp"
#include "ssav/arith/hensel.hpp"
#include "ssav/arith/kronecker.hpp"
#include "ssav/arith/primality.hpp"
#include "ssav/arith/residue_matrix.hpp"
#include "ssav/arith/smith.hpp"
