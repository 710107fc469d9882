#pragma once

#include "tdats/diagram.hpp"
#include "tdats/embedding.hpp"
#include "tdats/errors.hpp"
#include "tdats/features.hpp"
#include "tdats/io.hpp"
#include "tdats/landscape.hpp"
#include "tdats/metrics.hpp"
#include "tdats/rips.hpp"
#include "tdats/series.hpp"
#include "tdats/spectral.hpp"
#include "tdats/sublevel.hpp"
