#pragma once

#include "mincut/bits.hpp"
#include "mincut/canonical.hpp"
#include "mincut/classify.hpp"
#include "mincut/cut_structure.hpp"
#include "mincut/error.hpp"
#include "mincut/experiments.hpp"
#include "mincut/graph.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/mincuts.hpp"
#include "mincut/xoperator.hpp"
