#pragma once

#include "bessel.hpp"
#include "circuit.hpp"
#include "common.hpp"
#include "constants.hpp"
#include "core_model.hpp"
#include "higgs.hpp"
#include "inductor.hpp"
#include "island.hpp"
#include "junction.hpp"
#include "operators.hpp"
#include "parallel.hpp"
#include "quadrature.hpp"
#include "subspace.hpp"
#include "wkb.hpp"
