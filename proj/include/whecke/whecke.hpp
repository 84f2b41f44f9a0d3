#pragma once

// Umbrella header.

#include "whecke/eigen.hpp"
#include "whecke/errors.hpp"
#include "whecke/functor.hpp"
#include "whecke/heckealg.hpp"
#include "whecke/heckemod.hpp"
#include "whecke/kl.hpp"
#include "whecke/literals.hpp"
#include "whecke/matrix.hpp"
#include "whecke/multiplicity.hpp"
#include "whecke/multisegment.hpp"
#include "whecke/orbitmap.hpp"
#include "whecke/permutation.hpp"
#include "whecke/rational.hpp"
#include "whecke/verma.hpp"
#include "whecke/weight.hpp"
#include "whecke/weyl.hpp"
