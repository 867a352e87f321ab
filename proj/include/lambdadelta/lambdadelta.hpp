#pragma once

#include "lambdadelta/arity.hpp"
#include "lambdadelta/bigtree.hpp"
#include "lambdadelta/extended.hpp"
#include "lambdadelta/partial.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/relocation.hpp"
#include "lambdadelta/statics.hpp"
#include "lambdadelta/suites.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"
#include "lambdadelta/traversal.hpp"
#include "lambdadelta/validity.hpp"
