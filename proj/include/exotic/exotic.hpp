#ifndef EXOTIC_EXOTIC_HPP
#define EXOTIC_EXOTIC_HPP

#include "bijections.hpp"
#include "matrix.hpp"
#include "matrix_oracle.hpp"
#include "normal_forms.hpp"
#include "orbit_reduction.hpp"
#include "outcome.hpp"
#include "partitions.hpp"
#include "serialization.hpp"
#include "table.hpp"
#include "verify.hpp"
#include "weyl.hpp"

#endif
