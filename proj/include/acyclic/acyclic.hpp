#ifndef ACYCLIC_ACYCLIC_HPP
#define ACYCLIC_ACYCLIC_HPP

#include "acyclic/bounds.hpp"
#include "acyclic/coloring.hpp"
#include "acyclic/extremal.hpp"
#include "acyclic/generators.hpp"
#include "acyclic/graph.hpp"
#include "acyclic/io.hpp"
#include "acyclic/lcl.hpp"
#include "acyclic/solver.hpp"

#endif  // ACYCLIC_ACYCLIC_HPP
