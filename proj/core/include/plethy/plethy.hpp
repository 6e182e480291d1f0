#pragma once

#include "plethy/actions.hpp"
#include "plethy/characters.hpp"
#include "plethy/combinatorics.hpp"
#include "plethy/conjecture.hpp"
#include "plethy/delta.hpp"
#include "plethy/error.hpp"
#include "plethy/exact_arith.hpp"
#include "plethy/linalg.hpp"
#include "plethy/matrix_io.hpp"
#include "plethy/phi.hpp"
#include "plethy/poly.hpp"
#include "plethy/scalar.hpp"
#include "plethy/sparse.hpp"
#include "plethy/space.hpp"
