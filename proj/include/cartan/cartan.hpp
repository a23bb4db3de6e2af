#pragma once

// Umbrella header.

#include "cartan/cli.hpp"
#include "cartan/characters.hpp"
#include "cartan/dynkin.hpp"
#include "cartan/errors.hpp"
#include "cartan/fourier.hpp"
#include "cartan/haar.hpp"
#include "cartan/int_linalg.hpp"
#include "cartan/lattice.hpp"
#include "cartan/names.hpp"
#include "cartan/root_system.hpp"
#include "cartan/su2.hpp"
#include "cartan/tensor.hpp"
#include "cartan/verify.hpp"
#include "cartan/weight.hpp"
#include "cartan/weyl.hpp"
