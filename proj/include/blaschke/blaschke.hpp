#pragma once

// Umbrella header for the numerical core.

#include "blaschke/errors.hpp"
#include "blaschke/fnspace.hpp"
#include "blaschke/norms.hpp"
#include "blaschke/parse.hpp"
#include "blaschke/products.hpp"
#include "blaschke/schauder.hpp"
#include "blaschke/tmw.hpp"
#include "blaschke/toeplitz.hpp"
