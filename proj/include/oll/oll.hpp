#pragma once

// umbrella for the math layer; the JSON/job layer (job.hpp, json_io.hpp)
// additionally needs nlohmann/json on the include path, include it directly

#include "duality.hpp"
#include "level.hpp"
#include "modular.hpp"
#include "oracle.hpp"
#include "orlicz_function.hpp"
#include "scalar_solve.hpp"
#include "sequence.hpp"
#include "step_function.hpp"
#include "tolerance.hpp"
#include "weight.hpp"
