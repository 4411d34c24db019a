#pragma once

#include "rcflab/cmnumeric/checks.hpp"
#include "rcflab/cmnumeric/modular.hpp"
#include "rcflab/cmnumeric/real.hpp"
#include "rcflab/cmnumeric/recognize.hpp"
