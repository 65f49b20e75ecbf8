#pragma once

#include "netdist/analysis.hpp"
#include "netdist/errors.hpp"
#include "netdist/generators.hpp"
#include "netdist/graph.hpp"
#include "netdist/hamming.hpp"
#include "netdist/him.hpp"
#include "netdist/io.hpp"
#include "netdist/kernel.hpp"
#include "netdist/matrix.hpp"
#include "netdist/parallel.hpp"
#include "netdist/quadrature.hpp"
#include "netdist/rng.hpp"
#include "netdist/root_finding.hpp"
#include "netdist/spectral.hpp"
#include "netdist/symmetric_eigen.hpp"
