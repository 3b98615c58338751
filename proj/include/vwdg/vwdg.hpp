/** \file vwdg.hpp
 * Umbrella header for the whole library.
 */

#pragma once

#include "vwdg/basis.hpp"
#include "vwdg/diagnostics.hpp"
#include "vwdg/driver.hpp"
#include "vwdg/mesh.hpp"
#include "vwdg/problems.hpp"
#include "vwdg/scheme_common.hpp"
#include "vwdg/scheme_rs.hpp"
#include "vwdg/scheme_vw.hpp"
#include "vwdg/shock_capturing.hpp"
#include "vwdg/timestepper.hpp"
#include "vwdg/wavespeed.hpp"
