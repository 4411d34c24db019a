#pragma once

#include "rcflab/qseries/builders.hpp"
#include "rcflab/qseries/catalog.hpp"
#include "rcflab/qseries/cyclo8.hpp"
#include "rcflab/qseries/serialize.hpp"
#include "rcflab/qseries/series.hpp"
