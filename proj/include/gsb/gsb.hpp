#pragma once

#include "gsb/error.hpp"
#include "gsb/scalar.hpp"
#include "gsb/monoid.hpp"
#include "gsb/order.hpp"
#include "gsb/polynomial.hpp"
#include "gsb/composition.hpp"
#include "gsb/rewrite.hpp"
#include "gsb/lift.hpp"
#include "gsb/oracle.hpp"
#include "gsb/presentation.hpp"
