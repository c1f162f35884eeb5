#pragma once

#include "vcmod/bitset.hpp"
#include "vcmod/class_io.hpp"
#include "vcmod/classgen.hpp"
#include "vcmod/domain.hpp"
#include "vcmod/empirics.hpp"
#include "vcmod/errors.hpp"
#include "vcmod/finite_cofinite.hpp"
#include "vcmod/learning.hpp"
#include "vcmod/limits.hpp"
#include "vcmod/measures.hpp"
#include "vcmod/parallel.hpp"
#include "vcmod/random.hpp"
#include "vcmod/shattering.hpp"
#include "vcmod/stone.hpp"
#include "vcmod/version.hpp"
