#pragma once

// Umbrella header.

#include "chiral/abelian_group.hpp"
#include "chiral/analysis.hpp"
#include "chiral/constructions.hpp"
#include "chiral/degree_set.hpp"
#include "chiral/expr.hpp"
#include "chiral/graded_group.hpp"
#include "chiral/manifold.hpp"
#include "chiral/parser.hpp"
#include "chiral/reports.hpp"
#include "chiral/residue.hpp"
#include "chiral/serialize.hpp"
