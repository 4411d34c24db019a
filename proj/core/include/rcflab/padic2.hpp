#pragma once

#include "rcflab/padic2/dynamics.hpp"
#include "rcflab/padic2/serialize.hpp"
#include "rcflab/padic2/unramified.hpp"
