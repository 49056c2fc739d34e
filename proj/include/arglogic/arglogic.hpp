#pragma once

#include "arglogic/af.hpp"
#include "arglogic/equational.hpp"
#include "arglogic/errors.hpp"
#include "arglogic/formula.hpp"
#include "arglogic/logic.hpp"
#include "arglogic/semantics.hpp"
#include "arglogic/truth.hpp"
#include "arglogic/verify.hpp"
