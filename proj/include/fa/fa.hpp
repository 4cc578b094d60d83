#pragma once

// Umbrella header for the whole workbench.

#include "fa/corpus.hpp"
#include "fa/errors.hpp"
#include "fa/eval.hpp"
#include "fa/formula.hpp"
#include "fa/hierarchy.hpp"
#include "fa/induct.hpp"
#include "fa/nat.hpp"
#include "fa/parse.hpp"
#include "fa/pretty.hpp"
#include "fa/realize.hpp"
#include "fa/seq.hpp"
#include "fa/term.hpp"
