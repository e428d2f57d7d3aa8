#pragma once

#include "rational.hpp"
#include "core.hpp"
#include "linalg.hpp"
#include "tables.hpp"
#include "duval.hpp"
#include "dualgraph.hpp"
#include "eulerform.hpp"
#include "cbf.hpp"
#include "mordellweil.hpp"
#include "fibration.hpp"
