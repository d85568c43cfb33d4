#pragma once

#include "insrobust/classify.hpp"
#include "insrobust/counting.hpp"
#include "insrobust/primitivity.hpp"
#include "insrobust/record.hpp"
#include "insrobust/repetitions.hpp"
#include "insrobust/word.hpp"
