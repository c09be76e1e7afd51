#ifndef QRG_QRG_HPP_
#define QRG_QRG_HPP_

#include "qrg/constructions.hpp"
#include "qrg/covering.hpp"
#include "qrg/error.hpp"
#include "qrg/gfmat.hpp"
#include "qrg/group.hpp"
#include "qrg/limits.hpp"
#include "qrg/permutation.hpp"
#include "qrg/rational.hpp"
#include "qrg/reptheory.hpp"
#include "qrg/unitgeom.hpp"

#endif  // QRG_QRG_HPP_
