#pragma once

#include "automaton.hpp"
#include "closure.hpp"
#include "growth.hpp"
#include "hanoi.hpp"
#include "report.hpp"
#include "star.hpp"
#include "symmetry.hpp"
#include "text_format.hpp"
