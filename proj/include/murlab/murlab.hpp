#pragma once

// Umbrella header for the murlab library.

#include "murlab/rational.hpp"
#include "murlab/unipoly.hpp"
#include "murlab/multipoly.hpp"
#include "murlab/algebraic.hpp"
#include "murlab/matrix.hpp"
#include "murlab/linalg.hpp"
#include "murlab/graph.hpp"
#include "murlab/graph_io.hpp"
#include "murlab/generators.hpp"
#include "murlab/structure.hpp"
#include "murlab/induced_paths.hpp"
#include "murlab/recognize.hpp"
#include "murlab/params.hpp"
#include "murlab/certificate.hpp"
#include "murlab/bounds.hpp"
#include "murlab/mur.hpp"
#include "murlab/replay.hpp"
#include "murlab/fixtures.hpp"
#include "murlab/report.hpp"
#include "murlab/suites.hpp"
