#pragma once

// Umbrella header.

#include "fibsub/beatty.hpp"
#include "fibsub/classify.hpp"
#include "fibsub/grundy.hpp"
#include "fibsub/verify.hpp"
#include "fibsub/zeckendorf.hpp"
