#pragma once

#include "kerrkick/analytic.hpp"
#include "kerrkick/config.hpp"
#include "kerrkick/entanglement.hpp"
#include "kerrkick/errors.hpp"
#include "kerrkick/fock_space.hpp"
#include "kerrkick/hamiltonians.hpp"
#include "kerrkick/numerics.hpp"
#include "kerrkick/propagation.hpp"
#include "kerrkick/runner.hpp"
#include "kerrkick/trajectory.hpp"
