#pragma once

#include "specker/checked.hpp"
#include "specker/duality.hpp"
#include "specker/error.hpp"
#include "specker/intlin.hpp"
#include "specker/limits.hpp"
#include "specker/mspace.hpp"
#include "specker/mv.hpp"
#include "specker/omega.hpp"
#include "specker/sgroup.hpp"
#include "specker/laws.hpp"
#include "specker/dot.hpp"
#include "specker/io.hpp"
#include "specker/universe.hpp"
