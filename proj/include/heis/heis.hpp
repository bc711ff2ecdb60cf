#pragma once

#include "heis/automorphism.hpp"
#include "heis/cohomology.hpp"
#include "heis/element.hpp"
#include "heis/gl2.hpp"
#include "heis/integer.hpp"
#include "heis/lattice.hpp"
