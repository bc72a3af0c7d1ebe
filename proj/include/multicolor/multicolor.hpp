#pragma once

#include "errors.hpp"
#include "limits.hpp"
#include "vector_algebra.hpp"
#include "instance.hpp"
#include "mis.hpp"
#include "permissible.hpp"
#include "coloring_value.hpp"
#include "coloring.hpp"
#include "chromatic.hpp"
#include "oncall.hpp"
#include "extension.hpp"
#include "oracle.hpp"
