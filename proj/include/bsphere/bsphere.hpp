#pragma once

#include "bsphere/anf.hpp"
#include "bsphere/anf_io.hpp"
#include "bsphere/bit_index.hpp"
#include "bsphere/code.hpp"
#include "bsphere/errors.hpp"
#include "bsphere/mindist.hpp"
#include "bsphere/sphere.hpp"
#include "bsphere/symmetric_poly.hpp"
