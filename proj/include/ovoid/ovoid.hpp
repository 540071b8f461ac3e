#ifndef OVOID_OVOID_HPP
#define OVOID_OVOID_HPP

#include "ovoid/base_field.hpp"
#include "ovoid/bounds.hpp"
#include "ovoid/codes.hpp"
#include "ovoid/field_tower.hpp"
#include "ovoid/geometry.hpp"
#include "ovoid/krawtchouk.hpp"
#include "ovoid/linear_code.hpp"
#include "ovoid/parallel.hpp"
#include "ovoid/rational_poly.hpp"
#include "ovoid/verify.hpp"
#include "ovoid/weight_distribution.hpp"

#endif
