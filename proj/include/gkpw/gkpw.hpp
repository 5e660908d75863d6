// gkpw.hpp
// Umbrella header.

#pragma once

#include "gkpw/analysis.hpp"
#include "gkpw/bloch.hpp"
#include "gkpw/constants.hpp"
#include "gkpw/io.hpp"
#include "gkpw/lattice.hpp"
#include "gkpw/squeezed.hpp"
