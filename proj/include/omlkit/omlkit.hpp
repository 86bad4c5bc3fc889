#pragma once

#include "lattice.hpp"
#include "catalog.hpp"
#include "block.hpp"
#include "modal.hpp"
#include "search.hpp"
#include "valuations.hpp"
#include "structures.hpp"
#include "square.hpp"
#include "io.hpp"
