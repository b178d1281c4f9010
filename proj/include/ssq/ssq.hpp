#pragma once

#include "ssq/constructions.hpp"
#include "ssq/enumeration.hpp"
#include "ssq/errors.hpp"
#include "ssq/field.hpp"
#include "ssq/group.hpp"
#include "ssq/json_io.hpp"
#include "ssq/squares.hpp"
#include "ssq/vector_space.hpp"
