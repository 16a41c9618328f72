#pragma once

#include "cellmod.hpp"
#include "coeffring.hpp"
#include "diagrams.hpp"
#include "grothendieck.hpp"
#include "homsolve.hpp"
#include "linalg.hpp"
#include "serialize.hpp"
#include "tower.hpp"
#include "verify.hpp"
