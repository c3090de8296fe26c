#pragma once

#include "omegalie/errors.hpp"
#include "omegalie/fields.hpp"
#include "omegalie/matrix.hpp"
#include "omegalie/forms.hpp"
#include "omegalie/polynomial.hpp"
#include "omegalie/groebner.hpp"
#include "omegalie/algebra.hpp"
#include "omegalie/algebra_io.hpp"
#include "omegalie/report.hpp"
#include "omegalie/variety.hpp"
#include "omegalie/classify.hpp"
