#pragma once

#include "cdcheck/bigint.hpp"
#include "cdcheck/arith.hpp"
#include "cdcheck/cyclotomic.hpp"
#include "cdcheck/factor.hpp"
#include "cdcheck/zsigmondy.hpp"
#include "cdcheck/degree.hpp"
#include "cdcheck/catalog.hpp"
#include "cdcheck/verifier.hpp"
