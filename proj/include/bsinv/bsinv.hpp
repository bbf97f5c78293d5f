#ifndef BSINV_BSINV_HPP
#define BSINV_BSINV_HPP

#include "bsinv/bspline.hpp"
#include "bsinv/cos_method.hpp"
#include "bsinv/diagnostics.hpp"
#include "bsinv/spectral.hpp"
#include "bsinv/transforms.hpp"
#include "bsinv/types.hpp"
#include "bsinv/wavelet_approx.hpp"

#endif  // BSINV_BSINV_HPP
