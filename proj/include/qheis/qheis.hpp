#pragma once

#include "coeffs.hpp"
#include "ncpoly.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "families.hpp"
#include "interface/parse.hpp"
#include "interface/format.hpp"
#include "interface/presentation_io.hpp"
#include "verify.hpp"
#include "cli.hpp"
