#ifndef SYMGB_SYMGB_HPP
#define SYMGB_SYMGB_HPP

#include "coefficient.hpp"
#include "errors.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "monomial.hpp"
#include "oracle.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"
#include "reduction.hpp"
#include "sym_order.hpp"

#endif // SYMGB_SYMGB_HPP
