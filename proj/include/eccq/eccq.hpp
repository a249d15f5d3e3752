#pragma once

// Umbrella header: the complete elliptic-central-character toolkit.

#include "eccq/laurent.hpp"
#include "eccq/rational_fn.hpp"
#include "eccq/cartan.hpp"
#include "eccq/polymat.hpp"
#include "eccq/divisor.hpp"
#include "eccq/intmat.hpp"
#include "eccq/reference.hpp"
#include "eccq/blocks.hpp"
#include "eccq/cache.hpp"
#include "eccq/verify.hpp"
