#pragma once

#include "srm/bruhat.hpp"
#include "srm/core.hpp"
#include "srm/decompose.hpp"
#include "srm/digraph.hpp"
#include "srm/enumerate.hpp"
#include "srm/interchange.hpp"
#include "srm/io.hpp"
#include "srm/matrix.hpp"
#include "srm/polytope.hpp"
