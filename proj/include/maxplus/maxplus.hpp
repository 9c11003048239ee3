#pragma once

#include "maxplus/core.hpp"
#include "maxplus/extremality.hpp"
#include "maxplus/generate.hpp"
#include "maxplus/io.hpp"
#include "maxplus/oracle.hpp"
#include "maxplus/scalar.hpp"
#include "maxplus/tangent_digraph.hpp"
#include "maxplus/witness.hpp"
