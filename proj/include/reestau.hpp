// Umbrella header.
#pragma once

#include "reestau/errors.hpp"
#include "reestau/field.hpp"
#include "reestau/polynomial.hpp"
#include "reestau/parse.hpp"
#include "reestau/linalg.hpp"
#include "reestau/rees.hpp"
#include "reestau/diffsat.hpp"
#include "reestau/tangent.hpp"
#include "reestau/elim.hpp"
#include "reestau/algfile.hpp"
#include "reestau/report.hpp"
#include "reestau/verify.hpp"
