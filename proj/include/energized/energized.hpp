#pragma once

#include "energized/connection.hpp"
#include "energized/determinants.hpp"
#include "energized/eigen.hpp"
#include "energized/error.hpp"
#include "energized/identities.hpp"
#include "energized/kaehler.hpp"
#include "energized/matrix.hpp"
#include "energized/parse.hpp"
#include "energized/presets.hpp"
#include "energized/random.hpp"
#include "energized/scalars.hpp"
#include "energized/setsystem.hpp"
#include "energized/spectral.hpp"
