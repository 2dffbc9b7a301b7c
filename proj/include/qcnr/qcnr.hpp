#pragma once

#include "qcnr/analysis.hpp"
#include "qcnr/automorphism.hpp"
#include "qcnr/code.hpp"
#include "qcnr/decoder.hpp"
#include "qcnr/gf.hpp"
#include "qcnr/matrix.hpp"
#include "qcnr/niederreiter.hpp"
#include "qcnr/serialize.hpp"
