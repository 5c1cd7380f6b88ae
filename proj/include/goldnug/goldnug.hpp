#pragma once

#include "goldnug/cs_game.hpp"
#include "goldnug/dyadic.hpp"
#include "goldnug/fibonacci.hpp"
#include "goldnug/game.hpp"
#include "goldnug/game_text.hpp"
#include "goldnug/json_io.hpp"
#include "goldnug/nugget.hpp"
#include "goldnug/positions.hpp"
#include "goldnug/rcf.hpp"
#include "goldnug/subtraction.hpp"
#include "goldnug/verify.hpp"
