#pragma once

// Umbrella header for the library (JSON, SVG and CLI layers excluded).

#include "sprsynth/errors.hpp"
#include "sprsynth/rational.hpp"
#include "sprsynth/polynomial.hpp"
#include "sprsynth/sturm.hpp"
#include "sprsynth/stability.hpp"
#include "sprsynth/families.hpp"
#include "sprsynth/regions.hpp"
#include "sprsynth/spr.hpp"
#include "sprsynth/simplex.hpp"
#include "sprsynth/probe.hpp"
#include "sprsynth/synth.hpp"
