#pragma once

// Umbrella header: the whole library.

#include "ebq/catalog.hpp"
#include "ebq/correspond.hpp"
#include "ebq/scenario.hpp"
