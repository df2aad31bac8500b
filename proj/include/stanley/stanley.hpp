#pragma once

#include "stanley/bounds.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/experiment.hpp"
#include "stanley/ideal.hpp"
#include "stanley/monomial.hpp"
#include "stanley/parse.hpp"
#include "stanley/poset.hpp"
