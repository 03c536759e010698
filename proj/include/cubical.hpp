#pragma once

#include "cubical/actions.hpp"
#include "cubical/bitset.hpp"
#include "cubical/bridges.hpp"
#include "cubical/checkpoints.hpp"
#include "cubical/complex.hpp"
#include "cubical/coxeter.hpp"
#include "cubical/cubes.hpp"
#include "cubical/deligne.hpp"
#include "cubical/errors.hpp"
#include "cubical/generators.hpp"
#include "cubical/hyperplanes.hpp"
#include "cubical/io.hpp"
