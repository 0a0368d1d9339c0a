#pragma once

#include "exdepth/graph.hpp"
#include "exdepth/families.hpp"
#include "exdepth/invariants.hpp"
#include "exdepth/linalg.hpp"
#include "exdepth/variety.hpp"
#include "exdepth/exterior.hpp"
#include "exdepth/hochster.hpp"
#include "exdepth/depth.hpp"
#include "exdepth/report_json.hpp"
#include "exdepth/cache.hpp"
#include "exdepth/search.hpp"
#include "exdepth/acceptance.hpp"
