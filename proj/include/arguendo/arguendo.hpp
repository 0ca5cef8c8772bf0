#pragma once

#include "arguendo/case_file.hpp"
#include "arguendo/cli.hpp"
#include "arguendo/dot.hpp"
#include "arguendo/errors.hpp"
#include "arguendo/evaluation.hpp"
#include "arguendo/graph.hpp"
#include "arguendo/pleadings.hpp"
#include "arguendo/semantics.hpp"
