#pragma once

#include "newtonjump/checked.hpp"
#include "newtonjump/lattice.hpp"
#include "newtonjump/diagram.hpp"
#include "newtonjump/eea.hpp"
#include "newtonjump/constructions.hpp"
#include "newtonjump/predictor.hpp"
#include "newtonjump/oracle.hpp"
#include "newtonjump/dsl.hpp"
#include "newtonjump/json_io.hpp"
#include "newtonjump/cli.hpp"
