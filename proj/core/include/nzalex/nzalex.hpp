#pragma once

#include "nzalex/context.hpp"
#include "nzalex/dual_complex.hpp"
#include "nzalex/error.hpp"
#include "nzalex/group_algebra.hpp"
#include "nzalex/json_io.hpp"
#include "nzalex/l2_estimator.hpp"
#include "nzalex/laurent.hpp"
#include "nzalex/matrix.hpp"
#include "nzalex/nz_invariants.hpp"
#include "nzalex/triangulation.hpp"
#include "nzalex/twisted_invariants.hpp"
