#pragma once

#include "hetero/errors.hpp"
#include "hetero/ratpoly/certificate.hpp"
#include "hetero/ratpoly/pade.hpp"
#include "hetero/ratpoly/poly.hpp"
#include "hetero/ratpoly/quad.hpp"
#include "hetero/ratpoly/rat.hpp"
#include "hetero/ratpoly/resultant.hpp"
#include "hetero/ratpoly/rfun.hpp"
#include "hetero/ratpoly/serialize.hpp"
#include "hetero/ratpoly/sturm.hpp"
