#ifndef MMLAB_MMLAB_HPP
#define MMLAB_MMLAB_HPP

#include "mmlab/algebra.hpp"
#include "mmlab/carrier.hpp"
#include "mmlab/catalog.hpp"
#include "mmlab/element_set.hpp"
#include "mmlab/error.hpp"
#include "mmlab/graph.hpp"
#include "mmlab/io.hpp"
#include "mmlab/isotropic.hpp"
#include "mmlab/limits.hpp"
#include "mmlab/matroid.hpp"
#include "mmlab/multimatroid.hpp"
#include "mmlab/orienting.hpp"
#include "mmlab/polynomial.hpp"
#include "mmlab/polynomials.hpp"

#endif  // MMLAB_MMLAB_HPP
