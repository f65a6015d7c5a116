#pragma once

// Umbrella header.

#include "qp/abelian.hpp"
#include "qp/binary_form.hpp"
#include "qp/characters.hpp"
#include "qp/config_aut.hpp"
#include "qp/diagonalize.hpp"
#include "qp/errors.hpp"
#include "qp/factor.hpp"
#include "qp/group.hpp"
#include "qp/group_maps.hpp"
#include "qp/hyperelliptic.hpp"
#include "qp/json_io.hpp"
#include "qp/matrix.hpp"
#include "qp/oracle.hpp"
#include "qp/pencil.hpp"
#include "qp/permutation.hpp"
#include "qp/picard.hpp"
#include "qp/poly.hpp"
#include "qp/prng.hpp"
#include "qp/projective.hpp"
#include "qp/rational.hpp"
#include "qp/slice.hpp"
#include "qp/snf.hpp"
#include "qp/verify.hpp"
