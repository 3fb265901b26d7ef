#ifndef ICE_ICE_HPP
#define ICE_ICE_HPP

#include "ice/asm_matrix.hpp"
#include "ice/cyclotomic.hpp"
#include "ice/errors.hpp"
#include "ice/graph.hpp"
#include "ice/laurent.hpp"
#include "ice/numbers.hpp"
#include "ice/partition.hpp"
#include "ice/serialize.hpp"
#include "ice/tangles.hpp"
#include "ice/verifier.hpp"

#endif
