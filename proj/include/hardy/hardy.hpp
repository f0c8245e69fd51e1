#pragma once

#include "hardy/config.hpp"
#include "hardy/error.hpp"
#include "hardy/io.hpp"
#include "hardy/parallel.hpp"
#include "hardy/projection.hpp"
#include "hardy/rh_lab.hpp"
#include "hardy/semigroup.hpp"
#include "hardy/series.hpp"
#include "hardy/special_functions.hpp"
#include "hardy/spectral.hpp"
#include "hardy/verify.hpp"
