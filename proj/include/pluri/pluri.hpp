#pragma once

#include "admissibility.hpp"
#include "cases.hpp"
#include "classifier.hpp"
#include "congruence.hpp"
#include "enumerate.hpp"
#include "factory.hpp"
#include "fibre_local.hpp"
#include "model.hpp"
#include "sharp.hpp"
#include "theorem.hpp"
#include "verify_all.hpp"
