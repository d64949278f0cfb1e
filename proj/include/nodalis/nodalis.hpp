#pragma once

// Umbrella header for the nodalis library: exact analysis of the ordinary
// double points of plane algebraic curves.

#include "nodalis/errors.hpp"
#include "nodalis/field.hpp"
#include "nodalis/intersect.hpp"
#include "nodalis/node.hpp"
#include "nodalis/parse.hpp"
#include "nodalis/poly.hpp"
#include "nodalis/prime_field.hpp"
#include "nodalis/quad_ext.hpp"
#include "nodalis/rational.hpp"
#include "nodalis/series.hpp"
#include "nodalis/translate.hpp"
#include "nodalis/univariate.hpp"
#include "nodalis/weierstrass.hpp"
