#pragma once

#include "quatspin/dirac.hpp"
#include "quatspin/error.hpp"
#include "quatspin/gspinor.hpp"
#include "quatspin/iso_map.hpp"
#include "quatspin/multivector.hpp"
#include "quatspin/qspinor.hpp"
#include "quatspin/quat_rep.hpp"
#include "quatspin/quaternion.hpp"
#include "quatspin/random.hpp"
#include "quatspin/stereo.hpp"
