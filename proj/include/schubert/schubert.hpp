#pragma once

#include "errors.hpp"
#include "integer.hpp"
#include "partition.hpp"
#include "sparse_polynomial.hpp"
#include "cpolynomial.hpp"
#include "determinant.hpp"
#include "matrix.hpp"
#include "linear_solve.hpp"
#include "expansion.hpp"
#include "symmetric_polynomial.hpp"
#include "schur.hpp"
#include "qtilde.hpp"
#include "grassmannian.hpp"
#include "lagrangian.hpp"
#include "expression.hpp"
#include "corpus.hpp"
#include "positivity.hpp"
#include "legendrian.hpp"
