#pragma once

// Umbrella header for the DSO extremal-graph toolkit.

#include "dso/canonical.hpp"
#include "dso/enumerate.hpp"
#include "dso/families.hpp"
#include "dso/graph.hpp"
#include "dso/graph6.hpp"
#include "dso/verify.hpp"
#include "dso/weights.hpp"
