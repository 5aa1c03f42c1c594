#pragma once

#include "starindex/brouwer.hpp"
#include "starindex/eigencurve.hpp"
#include "starindex/errors.hpp"
#include "starindex/gauge_index.hpp"
#include "starindex/geometry.hpp"
#include "starindex/io.hpp"
#include "starindex/metric_density.hpp"
#include "starindex/radial_profile.hpp"
#include "starindex/selfmap.hpp"
#include "starindex/star_kernel.hpp"
#include "starindex/svg.hpp"
