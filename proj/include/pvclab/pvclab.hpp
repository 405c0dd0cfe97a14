#ifndef PVCLAB_PVCLAB_HPP
#define PVCLAB_PVCLAB_HPP

#include "pvclab/errors.hpp"
#include "pvclab/graph.hpp"
#include "pvclab/graph_core.hpp"
#include "pvclab/graph6.hpp"
#include "pvclab/products.hpp"
#include "pvclab/colorverify.hpp"
#include "pvclab/oracle.hpp"
#include "pvclab/theorems.hpp"
#include "pvclab/suite.hpp"

#endif  // PVCLAB_PVCLAB_HPP
