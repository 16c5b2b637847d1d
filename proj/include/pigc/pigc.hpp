#pragma once

#include "pigc/bit_matrix.hpp"
#include "pigc/caterpillar.hpp"
#include "pigc/completion_result.hpp"
#include "pigc/errors.hpp"
#include "pigc/generators.hpp"
#include "pigc/graph.hpp"
#include "pigc/io.hpp"
#include "pigc/oracle.hpp"
#include "pigc/quasi_threshold.hpp"
#include "pigc/recognition.hpp"
#include "pigc/threshold.hpp"
#include "pigc/xcheck.hpp"
