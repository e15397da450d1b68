#pragma once

#include "conres/cohomring.hpp"
#include "conres/combinat.hpp"
#include "conres/errors.hpp"
#include "conres/flagchar.hpp"
#include "conres/poly.hpp"
#include "conres/resolution.hpp"
#include "conres/stab.hpp"
