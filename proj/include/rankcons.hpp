#ifndef RANKCONS_HPP
#define RANKCONS_HPP

#include "rankcons/baselines.hpp"
#include "rankcons/consensus_graph.hpp"
#include "rankcons/datasets.hpp"
#include "rankcons/error.hpp"
#include "rankcons/experiment.hpp"
#include "rankcons/io.hpp"
#include "rankcons/measures.hpp"
#include "rankcons/oracle.hpp"
#include "rankcons/params.hpp"
#include "rankcons/ranking.hpp"
#include "rankcons/reference_tables.hpp"
#include "rankcons/results.hpp"
#include "rankcons/sweep.hpp"

#endif  // RANKCONS_HPP
