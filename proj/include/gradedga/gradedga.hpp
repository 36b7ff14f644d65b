#pragma once

#include "gradedga/algebra.hpp"
#include "gradedga/decomposition.hpp"
#include "gradedga/embeddings.hpp"
#include "gradedga/error.hpp"
#include "gradedga/exp_log.hpp"
#include "gradedga/matrix_rep.hpp"
#include "gradedga/multivector.hpp"
#include "gradedga/polynomial.hpp"
#include "gradedga/rotor_factorization.hpp"
#include "gradedga/tolerance.hpp"
