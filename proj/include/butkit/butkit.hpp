#pragma once

#include "butkit/check.hpp"
#include "butkit/convex.hpp"
#include "butkit/errors.hpp"
#include "butkit/json_io.hpp"
#include "butkit/manifolds.hpp"
#include "butkit/plmap.hpp"
#include "butkit/report_io.hpp"
#include "butkit/setmap.hpp"
#include "butkit/simplicial.hpp"
#include "butkit/solver.hpp"
#include "butkit/vec.hpp"
