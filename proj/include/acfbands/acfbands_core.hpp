#ifndef ACFBANDS_ACFBANDS_CORE_HPP
#define ACFBANDS_ACFBANDS_CORE_HPP

// Numerical core: everything except file formats, plotting and the CLI.

#include "acfbands/acf.hpp"
#include "acfbands/bands.hpp"
#include "acfbands/bartlett.hpp"
#include "acfbands/errors.hpp"
#include "acfbands/mvn.hpp"
#include "acfbands/portmanteau.hpp"
#include "acfbands/regression.hpp"
#include "acfbands/rng.hpp"
#include "acfbands/simulation.hpp"
#include "acfbands/special_functions.hpp"

#endif
