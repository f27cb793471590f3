#pragma once

#include "gpoly/cone.hpp"
#include "gpoly/errors.hpp"
#include "gpoly/exact.hpp"
#include "gpoly/io.hpp"
#include "gpoly/lp.hpp"
#include "gpoly/polyhedron.hpp"
#include "gpoly/simplex.hpp"
#include "gpoly/vlp.hpp"
