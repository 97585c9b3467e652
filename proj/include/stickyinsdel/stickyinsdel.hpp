#pragma once

// Umbrella header for the sticky-insdel sequence reconstruction library.

#include "stickyinsdel/bench.hpp"
#include "stickyinsdel/channel.hpp"
#include "stickyinsdel/combinatorics.hpp"
#include "stickyinsdel/errors.hpp"
#include "stickyinsdel/reconstruction.hpp"
#include "stickyinsdel/runlength.hpp"
