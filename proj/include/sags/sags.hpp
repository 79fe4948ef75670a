#pragma once

#include "sags/codespec.hpp"
#include "sags/decode.hpp"
#include "sags/extension.hpp"
