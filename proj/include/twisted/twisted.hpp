#pragma once

#include "twisted/integer.hpp"
#include "twisted/polynomial.hpp"
#include "twisted/exact_linalg.hpp"
#include "twisted/divisor_dynamics.hpp"
#include "twisted/twisted_ring.hpp"
#include "twisted/cohomology.hpp"
#include "twisted/json_io.hpp"
