#pragma once

#include "rcflab/exactalg/identities.hpp"
#include "rcflab/exactalg/mobius.hpp"
#include "rcflab/exactalg/numbers.hpp"
#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/exactalg/poly.hpp"
#include "rcflab/exactalg/resultant.hpp"
#include "rcflab/exactalg/serialize.hpp"
