#ifndef GLAB_GLAB_HPP
#define GLAB_GLAB_HPP

#include "glab/analysis.hpp"
#include "glab/complex.hpp"
#include "glab/complex_io.hpp"
#include "glab/constructions.hpp"
#include "glab/enumerate.hpp"
#include "glab/errors.hpp"
#include "glab/field.hpp"
#include "glab/graph.hpp"
#include "glab/graph_io.hpp"
#include "glab/homology.hpp"
#include "glab/independence.hpp"
#include "glab/isomorphism.hpp"
#include "glab/linalg.hpp"
#include "glab/parallel.hpp"
#include "glab/planarity.hpp"
#include "glab/report_json.hpp"
#include "glab/verify.hpp"
#include "glab/vertex_set.hpp"

#endif  // GLAB_GLAB_HPP
