#pragma once

#include "gop/errors.hpp"
#include "gop/exactalg/factorize.hpp"
#include "gop/exactalg/linear_dependence.hpp"
#include "gop/exactalg/matrix.hpp"
#include "gop/exactalg/padic.hpp"
#include "gop/exactalg/polynomial.hpp"
#include "gop/exactalg/prime_log.hpp"
#include "gop/exactalg/rational.hpp"
#include "gop/exactalg/rational_function.hpp"
#include "gop/orealg/catalog.hpp"
#include "gop/orealg/closure.hpp"
#include "gop/orealg/ore_operator.hpp"
#include "gop/orealg/series.hpp"
#include "gop/orealg/theta_form.hpp"
#include "gop/diffsystems/diff_system.hpp"
#include "gop/diffsystems/product_block.hpp"
#include "gop/sizecalc/galochkin.hpp"
#include "gop/sizecalc/padic_profile.hpp"
#include "gop/bounds/calculators.hpp"
#include "gop/bounds/pipeline.hpp"
