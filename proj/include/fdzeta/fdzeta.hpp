#ifndef FDZETA_FDZETA_HPP
#define FDZETA_FDZETA_HPP

#include "fdzeta/bernoulli.hpp"
#include "fdzeta/discovery.hpp"
#include "fdzeta/errors.hpp"
#include "fdzeta/identities.hpp"
#include "fdzeta/numctx.hpp"
#include "fdzeta/quadrature.hpp"
#include "fdzeta/report.hpp"
#include "fdzeta/special.hpp"
#include "fdzeta/version.hpp"

#endif
