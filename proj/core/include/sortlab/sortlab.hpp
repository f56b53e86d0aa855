#pragma once

#include "sortlab/counting.hpp"
#include "sortlab/harness.hpp"
#include "sortlab/insertion.hpp"
#include "sortlab/merge.hpp"
#include "sortlab/merge_insertion.hpp"
#include "sortlab/quickxsort.hpp"
#include "sortlab/random.hpp"
#include "sortlab/weak_heap.hpp"
