#ifndef CVXINFO_HPP
#define CVXINFO_HPP

#include "cvxinfo/ext_real.hpp"
#include "cvxinfo/simplex_lp.hpp"
#include "cvxinfo/phi.hpp"
#include "cvxinfo/convex_set.hpp"
#include "cvxinfo/phi_sets.hpp"
#include "cvxinfo/experiment.hpp"
#include "cvxinfo/information.hpp"
#include "cvxinfo/decision.hpp"
#include "cvxinfo/json_io.hpp"
#include "cvxinfo/verify.hpp"

#endif  // CVXINFO_HPP
