#pragma once

#include "hallforge/errors.hpp"
#include "hallforge/qlinalg/field.hpp"
#include "hallforge/qlinalg/general_linear.hpp"
#include "hallforge/qlinalg/matrix.hpp"
#include "hallforge/qlinalg/matrix_group.hpp"
#include "hallforge/qlinalg/qpoly.hpp"
#include "hallforge/qlinalg/subspace.hpp"
#include "hallforge/fincat/category.hpp"
#include "hallforge/fincat/objects.hpp"
#include "hallforge/fincat/rep_shape.hpp"
#include "hallforge/fincat/slice.hpp"
#include "hallforge/groupoid/action.hpp"
#include "hallforge/groupoid/corr_cube.hpp"
#include "hallforge/groupoid/cube.hpp"
#include "hallforge/groupoid/fiber_product.hpp"
#include "hallforge/groupoid/skeletal.hpp"
#include "hallforge/simpset/delta_plus.hpp"
#include "hallforge/simpset/hcomb.hpp"
#include "hallforge/simpset/subcomplex.hpp"
#include "hallforge/waldhausen/corr0.hpp"
#include "hallforge/waldhausen/ext.hpp"
#include "hallforge/waldhausen/flags.hpp"
#include "hallforge/waldhausen/segal.hpp"
#include "hallforge/hall/algebra.hpp"
#include "hallforge/hall/base_change.hpp"
#include "hallforge/hall/element.hpp"
#include "hallforge/hall/module.hpp"
#include "hallforge/hall/oracle.hpp"
