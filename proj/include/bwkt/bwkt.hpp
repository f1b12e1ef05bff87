#pragma once

#include "calibration.hpp"
#include "core.hpp"
#include "defaults.hpp"
#include "errors.hpp"
#include "extract.hpp"
#include "fft.hpp"
#include "fit.hpp"
#include "interference.hpp"
#include "io.hpp"
#include "models.hpp"
#include "noise.hpp"
#include "parallel.hpp"
#include "tsi.hpp"
