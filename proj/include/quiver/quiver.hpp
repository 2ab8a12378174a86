#pragma once

#include "quiver/adjacency.hpp"
#include "quiver/canonical.hpp"
#include "quiver/combination.hpp"
#include "quiver/error.hpp"
#include "quiver/expression.hpp"
#include "quiver/extremal.hpp"
#include "quiver/graph.hpp"
#include "quiver/io.hpp"
#include "quiver/leavitt.hpp"
#include "quiver/linalg.hpp"
#include "quiver/numeric.hpp"
#include "quiver/path_algebra.hpp"
#include "quiver/relaxation.hpp"
#include "quiver/structure.hpp"
