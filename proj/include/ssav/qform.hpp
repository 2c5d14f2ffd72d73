#pragma once

#include "ssav/qform/class_group.hpp"
#include "ssav/qform/class_number.hpp"
#include "ssav/qform/quad_form.hpp"
