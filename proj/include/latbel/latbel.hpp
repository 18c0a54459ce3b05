#ifndef LATBEL_LATBEL_HPP
#define LATBEL_LATBEL_HPP

#include "latbel/capacity.hpp"
#include "latbel/check.hpp"
#include "latbel/duality.hpp"
#include "latbel/error.hpp"
#include "latbel/evidence.hpp"
#include "latbel/lattice.hpp"
#include "latbel/poset.hpp"
#include "latbel/possibilistic.hpp"
#include "latbel/profile.hpp"
#include "latbel/report.hpp"
#include "latbel/standard.hpp"
#include "latbel/transforms.hpp"

#endif  // LATBEL_LATBEL_HPP
