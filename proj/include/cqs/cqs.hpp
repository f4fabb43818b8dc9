#pragma once

/// @file cqs.hpp
/// @brief Umbrella header for the library.

#include "cqs/chain.hpp"
#include "cqs/cqs_model.hpp"
#include "cqs/errors.hpp"
#include "cqs/int.hpp"
#include "cqs/invariants.hpp"
#include "cqs/kset.hpp"
#include "cqs/lattice.hpp"
#include "cqs/presolution.hpp"
#include "cqs/rational.hpp"
