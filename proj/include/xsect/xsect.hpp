#pragma once

#include "rational.hpp"
#include "geometry.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "outerplanar.hpp"
#include "family.hpp"

#include "verification/report.hpp"
#include "verification/verify.hpp"
#include "verification/counting.hpp"
#include "verification/signatures.hpp"

#include "constructions/circle_model.hpp"
#include "constructions/k4.hpp"
#include "constructions/ordering_gadget.hpp"
#include "constructions/graph_h.hpp"
#include "constructions/gk_segments.hpp"
#include "constructions/disks.hpp"
#include "constructions/powerset.hpp"

#include "io/model_file.hpp"
#include "io/graph_file.hpp"
#include "io/svg.hpp"
