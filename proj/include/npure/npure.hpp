#pragma once

#include "npure/builder.hpp"
#include "npure/context.hpp"
#include "npure/element_set.hpp"
#include "npure/endo.hpp"
#include "npure/error.hpp"
#include "npure/hom.hpp"
#include "npure/ideal.hpp"
#include "npure/localization.hpp"
#include "npure/pure_predicates.hpp"
#include "npure/purity.hpp"
#include "npure/ring.hpp"
#include "npure/ring_spec.hpp"
#include "npure/spectrum.hpp"
#include "npure/suite.hpp"
#include "npure/verdict.hpp"
#include "npure/zint.hpp"
