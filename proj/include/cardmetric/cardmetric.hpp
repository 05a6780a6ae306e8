#pragma once

#include "cardmetric/automorphisms.hpp"
#include "cardmetric/cayley.hpp"
#include "cardmetric/element.hpp"
#include "cardmetric/error.hpp"
#include "cardmetric/fixtures.hpp"
#include "cardmetric/geometry.hpp"
#include "cardmetric/group.hpp"
#include "cardmetric/group_map.hpp"
#include "cardmetric/integer_matrix.hpp"
#include "cardmetric/isometry.hpp"
#include "cardmetric/metrics.hpp"
#include "cardmetric/notation.hpp"
#include "cardmetric/rational.hpp"
#include "cardmetric/spec_io.hpp"
#include "cardmetric/verification.hpp"
