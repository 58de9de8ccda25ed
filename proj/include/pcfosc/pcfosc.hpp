#pragma once

#include "pcfosc/errors.hpp"
#include "pcfosc/field.hpp"
#include "pcfosc/ljmodel.hpp"
#include "pcfosc/numerics.hpp"
#include "pcfosc/oscillator.hpp"
#include "pcfosc/pcf.hpp"
#include "pcfosc/polys.hpp"
