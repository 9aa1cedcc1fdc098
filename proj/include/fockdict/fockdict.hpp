#pragma once

#include "fockdict/fock_core.hpp"
#include "fockdict/quadrature.hpp"
#include "fockdict/hermite_line.hpp"
#include "fockdict/bargmann.hpp"
#include "fockdict/operators.hpp"
#include "fockdict/singular.hpp"
#include "fockdict/gabor.hpp"
#include "fockdict/uncertainty.hpp"
#include "fockdict/quantize.hpp"
#include "fockdict/io.hpp"
#include "fockdict/suites.hpp"
