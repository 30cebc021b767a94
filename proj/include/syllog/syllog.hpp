#pragma once

// Umbrella header for the whole library: quantifier algebra, statement
// syntax, the saturation engine, and finite-model evaluation.

#include "syllog/algebra.hpp"   // IWYU pragma: export
#include "syllog/engine.hpp"    // IWYU pragma: export
#include "syllog/errors.hpp"    // IWYU pragma: export
#include "syllog/models.hpp"    // IWYU pragma: export
#include "syllog/syntax.hpp"    // IWYU pragma: export
