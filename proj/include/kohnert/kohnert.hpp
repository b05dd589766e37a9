#pragma once

#include "kohnert/classify.hpp"
#include "kohnert/diagram.hpp"
#include "kohnert/errors.hpp"
#include "kohnert/io.hpp"
#include "kohnert/polynomial.hpp"
#include "kohnert/poset.hpp"
#include "kohnert/shellability.hpp"
#include "kohnert/sweep.hpp"
