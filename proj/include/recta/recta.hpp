#pragma once

// umbrella header

#include "recta/action.hpp"
#include "recta/bfs.hpp"
#include "recta/bitvec.hpp"
#include "recta/coset_space.hpp"
#include "recta/covering.hpp"
#include "recta/derived.hpp"
#include "recta/error.hpp"
#include "recta/families.hpp"
#include "recta/golay.hpp"
#include "recta/graph.hpp"
#include "recta/iso.hpp"
#include "recta/kernel.hpp"
#include "recta/linear_code.hpp"
#include "recta/perm.hpp"
#include "recta/perm_group.hpp"
#include "recta/rank3.hpp"
#include "recta/recognize.hpp"
#include "recta/rect_over.hpp"
#include "recta/registry.hpp"
#include "recta/spin.hpp"
