#pragma once

#include "complete_graph.hpp"
#include "emit.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "numeric.hpp"
#include "path_search.hpp"
#include "stats.hpp"
#include "walk_counts.hpp"
