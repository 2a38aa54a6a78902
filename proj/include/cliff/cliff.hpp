#pragma once

// Umbrella header.
#include "cliff/basis.hpp"
#include "cliff/blade.hpp"
#include "cliff/dirac.hpp"
#include "cliff/error.hpp"
#include "cliff/fischer.hpp"
#include "cliff/linalg.hpp"
#include "cliff/multivector.hpp"
#include "cliff/numeric.hpp"
#include "cliff/parse.hpp"
#include "cliff/polynomial.hpp"
#include "cliff/rational.hpp"
#include "cliff/sampling.hpp"
