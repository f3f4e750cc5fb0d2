#pragma once

#include "kron/characters.hpp"
#include "kron/coefficient.hpp"
#include "kron/error.hpp"
#include "kron/io.hpp"
#include "kron/orbit.hpp"
#include "kron/partition.hpp"
#include "kron/reading.hpp"
#include "kron/step.hpp"
#include "kron/tableau.hpp"
#include "kron/verify.hpp"
