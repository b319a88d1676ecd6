#pragma once

#include "cfrac.hpp"
#include "dowling.hpp"
#include "hankel.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "orthopoly.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "riordan.hpp"
#include "series.hpp"
#include "verify.hpp"
