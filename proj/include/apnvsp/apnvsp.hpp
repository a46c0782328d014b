#pragma once

#include "apnvsp/admissibility.hpp"
#include "apnvsp/blocking.hpp"
#include "apnvsp/construct.hpp"
#include "apnvsp/equivalence.hpp"
#include "apnvsp/errors.hpp"
#include "apnvsp/field.hpp"
#include "apnvsp/gf2.hpp"
#include "apnvsp/io.hpp"
#include "apnvsp/parallel.hpp"
#include "apnvsp/partition.hpp"
#include "apnvsp/report.hpp"
#include "apnvsp/vbf.hpp"
