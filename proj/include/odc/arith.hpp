#pragma once

#include "odc/arith/bigint.hpp"
#include "odc/arith/factored_integer.hpp"
#include "odc/arith/factorize.hpp"
#include "odc/arith/modular.hpp"
#include "odc/arith/primality.hpp"
