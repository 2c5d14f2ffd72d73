#pragma once

#include "ssav/modclass/decompose.hpp"
#include "ssav/modclass/module.hpp"
#include "ssav/modclass/module_io.hpp"
