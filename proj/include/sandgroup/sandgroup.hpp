#pragma once

#include "sandgroup/catalog.hpp"
#include "sandgroup/duality.hpp"
#include "sandgroup/error.hpp"
#include "sandgroup/graph.hpp"
#include "sandgroup/integer.hpp"
#include "sandgroup/io.hpp"
#include "sandgroup/laplacian.hpp"
#include "sandgroup/matrix.hpp"
#include "sandgroup/outerplanar.hpp"
#include "sandgroup/plane.hpp"
#include "sandgroup/polygon.hpp"
#include "sandgroup/sandpile.hpp"
