// Umbrella header.

#pragma once

#include "geometry.hpp"
#include "io.hpp"
#include "iteration.hpp"
#include "oracle.hpp"
