#pragma once

#include "densecode/analysis.hpp"
#include "densecode/capacity.hpp"
#include "densecode/channels.hpp"
#include "densecode/complex_matrix.hpp"
#include "densecode/density_matrix.hpp"
#include "densecode/eigen.hpp"
#include "densecode/entropy.hpp"
#include "densecode/optimize.hpp"
#include "densecode/pauli_spec.hpp"
#include "densecode/preprocessing.hpp"
#include "densecode/rng.hpp"
#include "densecode/states.hpp"
#include "densecode/verification.hpp"
#include "densecode/weyl.hpp"
