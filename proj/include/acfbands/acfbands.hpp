#ifndef ACFBANDS_ACFBANDS_HPP
#define ACFBANDS_ACFBANDS_HPP

#include "acfbands/acfbands_core.hpp"
#include "acfbands/csv.hpp"
#include "acfbands/report.hpp"
#include "acfbands/svg.hpp"

#endif
