#pragma once

#include "constructions.hpp"
#include "correlation.hpp"
#include "cyclotomy.hpp"
#include "errors.hpp"
#include "gaussian.hpp"
#include "gf.hpp"
#include "lincomp.hpp"
#include "poly.hpp"
#include "sequence.hpp"
#include "spec_string.hpp"
#include "verify.hpp"
