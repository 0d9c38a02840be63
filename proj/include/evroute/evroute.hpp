#ifndef EVROUTE_EVROUTE_HPP
#define EVROUTE_EVROUTE_HPP

#include "evroute/charging.hpp"
#include "evroute/errors.hpp"
#include "evroute/experiment.hpp"
#include "evroute/graph.hpp"
#include "evroute/ingest.hpp"
#include "evroute/output.hpp"
#include "evroute/pareto_labeling.hpp"
#include "evroute/pareto_set.hpp"
#include "evroute/path_oracle.hpp"
#include "evroute/two_phase.hpp"
#include "evroute/utility_search.hpp"
#include "evroute/weight.hpp"

#endif
