#pragma once

#include "rational.hpp"
#include "interval_system.hpp"
#include "pillar_assignment.hpp"
#include "balanced_order.hpp"
#include "perm_coloring.hpp"
#include "oracles.hpp"
#include "augment.hpp"
#include "generator.hpp"
#include "verify.hpp"
#include "io.hpp"
#include "svg.hpp"
#include "corpus.hpp"
