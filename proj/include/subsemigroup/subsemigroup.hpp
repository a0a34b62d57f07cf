#pragma once

#include "subsemigroup/error.hpp"
#include "subsemigroup/length.hpp"
#include "subsemigroup/words.hpp"
#include "subsemigroup/substitution.hpp"
#include "subsemigroup/semigroup.hpp"
#include "subsemigroup/prefix_language.hpp"
#include "subsemigroup/flgraph.hpp"
#include "subsemigroup/fixedpoints.hpp"
#include "subsemigroup/limitset.hpp"
#include "subsemigroup/dimension.hpp"
#include "subsemigroup/hull.hpp"
#include "subsemigroup/oracles.hpp"
