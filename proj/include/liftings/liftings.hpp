#pragma once

#include "liftings/error.hpp"
#include "liftings/core/field.hpp"
#include "liftings/core/monomial.hpp"
#include "liftings/core/term_order.hpp"
#include "liftings/core/polynomial.hpp"
#include "liftings/core/text.hpp"
#include "liftings/groebner/normal_form.hpp"
#include "liftings/groebner/buchberger.hpp"
#include "liftings/groebner/ideal.hpp"
#include "liftings/lifting/template.hpp"
#include "liftings/lifting/scheme.hpp"
#include "liftings/isom/isomorphism.hpp"
#include "liftings/acm/acm.hpp"
