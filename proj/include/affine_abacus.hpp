#pragma once

#include "affine_abacus/error.hpp"
#include "affine_abacus/group.hpp"
#include "affine_abacus/mirrored_permutation.hpp"
#include "affine_abacus/abacus.hpp"
#include "affine_abacus/root_lattice.hpp"
#include "affine_abacus/core_partition.hpp"
#include "affine_abacus/peeling.hpp"
#include "affine_abacus/oracle.hpp"
#include "affine_abacus/serialize.hpp"
#include "affine_abacus/descriptor.hpp"
#include "affine_abacus/render.hpp"
#include "affine_abacus/poset.hpp"
