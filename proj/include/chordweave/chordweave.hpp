#pragma once

// Umbrella include for the whole library.

#include "chi.hpp"
#include "chord_diagram.hpp"
#include "chromatic.hpp"
#include "color_table.hpp"
#include "diagonal.hpp"
#include "four_term.hpp"
#include "hseries.hpp"
#include "lie_oracle.hpp"
#include "link_diagram.hpp"
#include "mpoly.hpp"
#include "power_sums.hpp"
#include "rational.hpp"
#include "skein.hpp"
#include "state_weights.hpp"
#include "util.hpp"
#include "weighted_graph.hpp"
