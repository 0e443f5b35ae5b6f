// Umbrella header for the numerical modules. JSON/CSV support lives in
// frames/io.hpp.
#pragma once

#include "frames/ambiguity.hpp"
#include "frames/core.hpp"
#include "frames/dft.hpp"
#include "frames/frame.hpp"
#include "frames/group.hpp"
#include "frames/multiplication.hpp"
#include "frames/uncertainty.hpp"
