#pragma once

#include "supercrystal/alphabet.hpp"
#include "supercrystal/characters.hpp"
#include "supercrystal/crystal.hpp"
#include "supercrystal/error.hpp"
#include "supercrystal/insertion.hpp"
#include "supercrystal/kite.hpp"
#include "supercrystal/matrix.hpp"
#include "supercrystal/polynomial.hpp"
#include "supercrystal/poset.hpp"
#include "supercrystal/shapes.hpp"
#include "supercrystal/tableau.hpp"
#include "supercrystal/verify.hpp"
