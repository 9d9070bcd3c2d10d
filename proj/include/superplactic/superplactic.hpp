#pragma once

#include "alphabet.hpp"
#include "bumping.hpp"
#include "error.hpp"
#include "plactic.hpp"
#include "ring.hpp"
#include "rsk.hpp"
#include "shape.hpp"
#include "tableau.hpp"
