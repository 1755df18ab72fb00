#pragma once

#include "chernform/bounds.hpp"
#include "chernform/chern.hpp"
#include "chernform/curvature.hpp"
#include "chernform/errors.hpp"
#include "chernform/form.hpp"
#include "chernform/io.hpp"
#include "chernform/models.hpp"
#include "chernform/polynomial.hpp"
#include "chernform/sampling.hpp"
#include "chernform/scalar.hpp"
#include "chernform/scalar_matrix.hpp"
#include "chernform/schur.hpp"
