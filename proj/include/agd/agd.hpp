#pragma once

#include "weights.hpp"
#include "local_rules.hpp"
#include "tableaux.hpp"
#include "staircase.hpp"
#include "hive.hpp"
#include "bijections.hpp"
#include "render.hpp"
